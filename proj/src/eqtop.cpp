#include "gzeta/eqtop.hpp"

#include <map>
#include <set>

namespace gzeta {

EquivariantEuler euler_from_strata(const Ctx& ctx, const std::vector<IsotropyStratum>& strata) {
    std::set<int> seen;
    EquivariantEuler out{BurnsideElement::zero(ctx), false};
    const int g_order = ctx->group().order();
    for (const auto& s : strata) {
        if (s.h_class < 0 || s.h_class >= ctx->class_count())
            throw ValidationError("stratum class index out of range");
        if (!seen.insert(s.h_class).second)
            throw ValidationError("duplicate stratum for class " + std::to_string(s.h_class));
        Rat coeff = frac(s.euler * ctx->classes().at(s.h_class).representative.order(), g_order);
        if (!is_integer(coeff)) out.non_integral = true;
        out.value += coeff * BurnsideElement::basis(ctx, s.h_class);
    }
    return out;
}

BurnsideElement euler_from_cells(const Ctx& ctx,
                                 const std::vector<std::pair<int, BurnsideElement>>& cells) {
    BurnsideElement out = BurnsideElement::zero(ctx);
    for (const auto& [dim, cellset] : cells) {
        require_same_context(ctx, cellset.context());
        if (dim < 0) throw ValidationError("cell dimension must be >= 0");
        if (!cellset.is_effective_integral())
            throw ValidationError("cell sets must be non-negative integral combinations");
        if (dim % 2 == 0)
            out += cellset;
        else
            out -= cellset;
    }
    return out;
}

BurnsideElement lefschetz_single_isotropy(const Ctx& ctx, long long lefschetz, int h_class) {
    if (h_class < 0 || h_class >= ctx->class_count())
        throw ValidationError("class index out of range");
    Rat coeff = frac(lefschetz * ctx->classes().at(h_class).representative.order(),
                     ctx->group().order());
    return coeff * BurnsideElement::basis(ctx, h_class);
}

SSequence s_from_lefschetz(const LefschetzSequence& l) {
    if (l.horizon() < 1) throw ValidationError("Lefschetz sequence needs horizon >= 1");
    const Ctx& ctx = l.values.front().context();
    for (const auto& v : l.values) require_same_context(ctx, v.context());
    SSequence s;
    s.values.reserve(l.horizon());
    for (int m = 1; m <= l.horizon(); ++m) {
        BurnsideElement sm = l.values[m - 1];
        for (int d = 1; d < m; ++d)
            if (m % d == 0) sm -= s.values[d - 1];
        s.values.push_back(std::move(sm));
    }
    return s;
}

LefschetzSequence lefschetz_from_s(const SSequence& s) {
    if (s.horizon() < 1) throw ValidationError("empty s-sequence");
    const Ctx& ctx = s.values.front().context();
    LefschetzSequence l;
    l.values.reserve(s.horizon());
    for (int m = 1; m <= s.horizon(); ++m) {
        BurnsideElement lm = BurnsideElement::zero(ctx);
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) lm += s.values[d - 1];
        l.values.push_back(std::move(lm));
    }
    return l;
}

std::vector<ExponentTerm> normalize_factors(
    const Ctx& ctx, const std::vector<std::pair<int, BurnsideElement>>& raw) {
    std::map<std::pair<int, int>, Rat> merged; // (m, class) -> coefficient
    for (const auto& [m, exponent] : raw) {
        require_same_context(ctx, exponent.context());
        for (int h = 0; h < ctx->class_count(); ++h)
            if (exponent.coeff(h) != 0) merged[{m, h}] += exponent.coeff(h);
    }
    std::vector<ExponentTerm> out;
    for (const auto& [key, q] : merged) {
        if (q == 0) continue;
        out.push_back(ExponentTerm{key.first, q * BurnsideElement::basis(ctx, key.second)});
    }
    return out; // map iteration is already (m, class) ascending
}

ZetaProduct zeta_from_lefschetz(const LefschetzSequence& l, int order) {
    if (order > l.horizon())
        throw ValidationError("Lefschetz horizon " + std::to_string(l.horizon()) +
                              " is too short for truncation order " + std::to_string(order));
    SSequence s = s_from_lefschetz(l);
    const Ctx& ctx = l.values.front().context();
    std::vector<std::pair<int, BurnsideElement>> raw;
    for (int m = 1; m <= s.horizon(); ++m)
        if (!s.values[m - 1].is_zero()) raw.emplace_back(m, s.values[m - 1] * frac(1, m));
    auto factors = normalize_factors(ctx, raw);
    return ZetaProduct{factors, expand_product(ctx, factors, order)};
}

BurnsideElement degree_from_s(const SSequence& s) {
    if (s.horizon() < 1) throw ValidationError("empty s-sequence");
    BurnsideElement out = BurnsideElement::zero(s.values.front().context());
    for (const auto& v : s.values) out += v;
    return out;
}

} // namespace gzeta
