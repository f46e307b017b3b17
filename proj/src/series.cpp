#include "gzeta/series.hpp"

#include <algorithm>

namespace gzeta {

RatSeries RatSeries::one(int order) {
    RatSeries s(order);
    s.c_[0] = 1;
    return s;
}

RatSeries RatSeries::mul(const RatSeries& o) const {
    const int n = std::min(order(), o.order());
    RatSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            if (o.c_[j] != 0) out.c_[i + j] += c_[i] * o.c_[j];
    }
    return out;
}

RatSeries RatSeries::inverse() const {
    if (c_[0] == 0) throw ValidationError("series with zero constant term has no inverse");
    const int n = order();
    RatSeries out(n);
    out.c_[0] = 1 / c_[0];
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j)
            if (c_[j] != 0) acc += c_[j] * out.c_[k - j];
        out.c_[k] = -acc / c_[0];
    }
    return out;
}

RatSeries RatSeries::exp() const {
    if (c_[0] != 0) throw ValidationError("formal exp needs zero constant term");
    const int n = order();
    RatSeries out(n);
    out.c_[0] = 1;
    // n e_n = sum_{k=1}^{n} k u_k e_{n-k}
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j)
            if (c_[j] != 0) acc += Rat(j) * c_[j] * out.c_[k - j];
        out.c_[k] = acc / k;
    }
    return out;
}

void RatSeries::add_scaled_log_inv(const Rat& q, int a) {
    if (a < 1) throw ValidationError("log factor exponent must be >= 1");
    for (int j = 1; a * j <= order(); ++j) c_[a * j] += q / j;
}

GSeries::GSeries(Ctx ctx, std::vector<BurnsideElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.empty()) throw ValidationError("series needs at least the constant term");
    for (const auto& e : c_) require_same_context(ctx_, e.context());
}

GSeries GSeries::one(const Ctx& ctx, int order) {
    std::vector<BurnsideElement> c(order + 1, BurnsideElement::zero(ctx));
    c[0] = BurnsideElement::unit(ctx);
    return GSeries(ctx, std::move(c));
}

bool GSeries::operator==(const GSeries& rhs) const {
    return ctx_.get() == rhs.ctx_.get() && c_ == rhs.c_;
}

namespace {

// C(n, k) saturating at cap+1; guards multiset enumeration totals.
long long binom_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long num = 1;
    for (long long i = 1; i <= k; ++i) {
        num = num * (n - k + i);
        if (num > cap * i) return cap + 1;
        num /= i; // exact: running value is C(n-k+i, i)
    }
    return num;
}

// Per-class scalar series of the ghost components of a GSeries.
std::vector<RatSeries> ghost_components(const GSeries& s) {
    const int dim = s.context()->class_count();
    std::vector<RatSeries> out(dim, RatSeries(s.order()));
    for (int k = 0; k <= s.order(); ++k) {
        GhostVector g = to_ghost(s.coeff(k));
        for (int c = 0; c < dim; ++c) out[c][k] = g[c];
    }
    return out;
}

GSeries from_ghost_components(const Ctx& ctx, const std::vector<RatSeries>& comp, int order) {
    std::vector<BurnsideElement> coeffs;
    coeffs.reserve(order + 1);
    GhostVector g(ctx->class_count());
    for (int k = 0; k <= order; ++k) {
        for (int c = 0; c < ctx->class_count(); ++c) g[c] = comp[c][k];
        coeffs.push_back(from_ghost(ctx, g));
    }
    return GSeries(ctx, std::move(coeffs));
}

} // namespace

GSeries lambda_series(const GSetExplicit& x, int order, long long multiset_cap) {
    if (order < 0) throw ValidationError("truncation order must be >= 0");
    if (binom_capped(x.size() + order, order, multiset_cap) > multiset_cap)
        throw SizeLimitError("lambda series would enumerate more than " +
                             std::to_string(multiset_cap) + " multisets");
    std::vector<BurnsideElement> coeffs;
    coeffs.reserve(order + 1);
    for (int k = 0; k <= order; ++k)
        coeffs.push_back(gset_decompose(sym_power_explicit(x, k, multiset_cap)));
    return GSeries(x.context(), std::move(coeffs));
}

GSeries expand_product(const Ctx& ctx, const std::vector<ExponentTerm>& terms, int order) {
    if (order < 0) throw ValidationError("truncation order must be >= 0");
    const int dim = ctx->class_count();
    std::vector<RatSeries> comp;
    comp.reserve(dim);
    for (int k = 0; k < dim; ++k) {
        RatSeries log_sum(order);
        for (const auto& term : terms) {
            if (term.m < 1) throw ValidationError("factor exponent m must be >= 1");
            require_same_context(ctx, term.exponent.context());
            for (int h = 0; h < dim; ++h) {
                const Rat& q = term.exponent.coeff(h);
                if (q == 0) continue;
                for (int s : ctx->coset_orbit_sizes(k, h))
                    log_sum.add_scaled_log_inv(q, term.m * s);
            }
        }
        comp.push_back(log_sum.exp());
    }
    return from_ghost_components(ctx, comp, order);
}

GSeries power_series(const Ctx& ctx, int base_m, const BurnsideElement& b, int order) {
    return expand_product(ctx, {ExponentTerm{base_m, b}}, order);
}

GSeries mul_series(const GSeries& a, const GSeries& b) {
    require_same_context(a.context(), b.context());
    const int order = std::min(a.order(), b.order());
    auto ca = ghost_components(a);
    auto cb = ghost_components(b);
    std::vector<RatSeries> comp;
    comp.reserve(ca.size());
    for (size_t i = 0; i < ca.size(); ++i) comp.push_back(ca[i].mul(cb[i]));
    return from_ghost_components(a.context(), comp, order);
}

GSeries inverse(const GSeries& a) {
    if (!(a.coeff(0) == BurnsideElement::unit(a.context())))
        throw ValidationError("series constant term must be the unit [G/G]");
    auto comp = ghost_components(a);
    for (auto& c : comp) c = c.inverse();
    return from_ghost_components(a.context(), comp, a.order());
}

BurnsideElement degree_of_product(const Ctx& ctx, const std::vector<ExponentTerm>& terms) {
    BurnsideElement deg = BurnsideElement::zero(ctx);
    for (const auto& term : terms) {
        require_same_context(ctx, term.exponent.context());
        deg += term.exponent * Rat(term.m);
    }
    return deg;
}

std::vector<Rat> forget_series(const GSeries& s) {
    std::vector<Rat> out;
    out.reserve(s.order() + 1);
    for (int k = 0; k <= s.order(); ++k) out.push_back(forget_to_integer(s.coeff(k)));
    return out;
}

} // namespace gzeta
