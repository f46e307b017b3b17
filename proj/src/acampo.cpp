#include "gzeta/acampo.hpp"

#include <map>

namespace gzeta {

StratumCheck validate_stratum(const Ctx& ctx, const ResolutionStratum& s) {
    const auto& g = ctx->group();
    StratumCheck check;
    auto fail = [&check](const std::string& what) {
        check.ok = false;
        check.issues.push_back(what);
    };
    if (s.m < 1) fail("multiplicity m must be >= 1");
    if (!is_subgroup(g, s.isotropy.members)) {
        fail("H is not a subgroup");
        return check;
    }
    if (!is_subgroup(g, s.slice_kernel.members)) {
        fail("Hhat is not a subgroup");
        return check;
    }
    if (!s.isotropy.contains(s.slice_kernel)) {
        fail("containment: Hhat is not contained in H");
        return check;
    }
    bool normal = true;
    for (int h : s.isotropy.members)
        if (conjugate_subgroup(g, s.slice_kernel, h) != s.slice_kernel) {
            normal = false;
            break;
        }
    if (!normal) fail("normality: Hhat is not normal in H");

    const int quotient = s.isotropy.order() / s.slice_kernel.order();
    if (normal) {
        // H/Hhat is cyclic iff some h has image of order |H|/|Hhat|; the image
        // order of h is the least j with h^j in Hhat.
        bool cyclic = false;
        for (int h : s.isotropy.members) {
            int x = h, j = 1;
            while (!s.slice_kernel.contains(x)) {
                x = g.mul(x, h);
                ++j;
            }
            if (j == quotient) {
                cyclic = true;
                break;
            }
        }
        if (!cyclic) fail("cyclicity: H/Hhat is not cyclic");
    }
    if (s.m >= 1 && s.m % quotient != 0)
        fail("divisibility: |H|/|Hhat| = " + std::to_string(quotient) +
             " does not divide m = " + std::to_string(s.m));
    return check;
}

namespace {

// Validate everything up front; returns warnings in non-strict mode.
// Zero-chi strata are exempt: the product formula makes them inert, and
// resolutions are routinely written down with bookkeeping entries of Euler
// characteristic zero whose (H, Hhat) labels are not pinned down.
std::vector<std::string> check_strata(const Ctx& ctx, const std::vector<ResolutionStratum>& strata,
                                      bool strict) {
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
    for (size_t i = 0; i < strata.size(); ++i) {
        if (strata[i].euler == 0) continue;
        auto check = validate_stratum(ctx, strata[i]);
        if (check.ok) continue;
        for (const auto& issue : check.issues) {
            std::string msg = "stratum " + std::to_string(i) + ": " + issue;
            // Containment underpins the pair classification, so it stays a
            // hard error even in non-strict mode.
            if (strict || issue.rfind("containment", 0) == 0 || issue.rfind("H is", 0) == 0 ||
                issue.rfind("Hhat is", 0) == 0)
                errors.push_back(msg);
            else
                warnings.push_back(msg);
        }
    }
    if (!errors.empty()) throw ValidationError("invalid resolution strata", errors);
    return warnings;
}

struct MergedStratum {
    int m;
    int hhat_class;
    long long chi;
};

// Merge strata by (m, simultaneous-conjugacy class of the pair), summing chi.
std::vector<MergedStratum> merge_strata(const Ctx& ctx,
                                        const std::vector<ResolutionStratum>& strata) {
    std::map<std::pair<int, PairClass>, MergedStratum> merged;
    for (const auto& s : strata) {
        if (s.euler == 0) continue;
        PairClass pc = pair_class_of(ctx->group(), s.isotropy, s.slice_kernel);
        auto key = std::make_pair(s.m, pc);
        auto it = merged.find(key);
        if (it == merged.end()) {
            int hhat_class = ctx->class_of(Subgroup{pc.hhat_members});
            merged.emplace(key, MergedStratum{s.m, hhat_class, s.euler});
        } else {
            it->second.chi += s.euler;
        }
    }
    std::vector<MergedStratum> out;
    out.reserve(merged.size());
    for (const auto& [key, v] : merged) out.push_back(v);
    return out;
}

} // namespace

ZetaResult zeta_acampo(const Ctx& ctx, const std::vector<ResolutionStratum>& strata, int order,
                       bool strict) {
    auto warnings = check_strata(ctx, strata, strict);
    const int g_order = ctx->group().order();
    std::vector<std::pair<int, BurnsideElement>> raw;
    for (const auto& ms : merge_strata(ctx, strata)) {
        if (ms.chi == 0) continue;
        Rat q = frac(static_cast<long>(ctx->classes().at(ms.hhat_class).representative.order()) *
                         ms.chi,
                     g_order);
        raw.emplace_back(ms.m, q * BurnsideElement::basis(ctx, ms.hhat_class));
    }
    auto factors = normalize_factors(ctx, raw);
    GSeries series = expand_product(ctx, factors, order);
    return ZetaResult{factors, series, degree_of_product(ctx, factors), forget_series(series),
                      std::move(warnings)};
}

BurnsideElement lefschetz_from_strata(const Ctx& ctx,
                                      const std::vector<ResolutionStratum>& strata, int k) {
    if (k < 1) throw ValidationError("monodromy power k must be >= 1");
    check_strata(ctx, strata, true);
    const int g_order = ctx->group().order();
    BurnsideElement out = BurnsideElement::zero(ctx);
    for (const auto& s : strata) {
        if (s.euler == 0 || k % s.m != 0) continue;
        int hhat_class = ctx->class_of(s.slice_kernel);
        Rat q = frac(static_cast<long>(s.m) * s.slice_kernel.order() * s.euler, g_order);
        out += q * BurnsideElement::basis(ctx, hhat_class);
    }
    return out;
}

BurnsideElement milnor_fibre_euler(const Ctx& ctx,
                                   const std::vector<ResolutionStratum>& strata) {
    check_strata(ctx, strata, true);
    const int g_order = ctx->group().order();
    BurnsideElement out = BurnsideElement::zero(ctx);
    for (const auto& s : strata) {
        if (s.euler == 0) continue;
        int hhat_class = ctx->class_of(s.slice_kernel);
        Rat q = frac(static_cast<long>(s.m) * s.slice_kernel.order() * s.euler, g_order);
        out += q * BurnsideElement::basis(ctx, hhat_class);
    }
    return out;
}

} // namespace gzeta
