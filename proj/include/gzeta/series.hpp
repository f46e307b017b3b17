#pragma once

#include "gzeta/burnside.hpp"

#include <vector>

namespace gzeta {

inline constexpr int kDefaultTruncationOrder = 12;
inline constexpr int kMaxTruncationOrder = 64;

/// Dense truncated power series over Q with exact coefficients, degrees
/// 0..order(). Just enough algebra for the ghost-component computations:
/// product, inverse, exp, and accumulation of -q*log(1 - t^a) terms.
class RatSeries {
public:
    explicit RatSeries(int order) : c_(order + 1, Rat(0)) {}
    static RatSeries one(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Rat& operator[](int k) { return c_[k]; }
    const Rat& operator[](int k) const { return c_[k]; }
    bool operator==(const RatSeries&) const = default;

    RatSeries mul(const RatSeries& o) const;      // truncates at the smaller order
    RatSeries inverse() const;                    // needs c0 != 0
    RatSeries exp() const;                        // needs c0 == 0
    void add_scaled_log_inv(const Rat& q, int a); // += q * sum_{j>=1} t^(a j)/j

private:
    std::vector<Rat> c_;
};

/// Truncated formal power series in t with BurnsideElement coefficients.
class GSeries {
public:
    GSeries(Ctx ctx, std::vector<BurnsideElement> coeffs);
    static GSeries one(const Ctx& ctx, int order);

    const Ctx& context() const { return ctx_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BurnsideElement& coeff(int k) const { return c_[k]; }
    const std::vector<BurnsideElement>& coeffs() const { return c_; }

    bool operator==(const GSeries& rhs) const;

private:
    Ctx ctx_;
    std::vector<BurnsideElement> c_;
};

/// One factor (1 - t^m)^{-exponent} of a zeta-style product. The sign lives
/// in the exponent element, so (1-t^6)^{+1/6 [G/e]} carries -1/6 [G/e] here.
struct ExponentTerm {
    int m = 1;
    BurnsideElement exponent;

    bool operator==(const ExponentTerm&) const = default;
};

/// Coefficient k is the orbit decomposition of the k-th symmetric power of X,
/// by direct multiset enumeration. This is the enumeration side of the
/// symmetric-power double oracle.
GSeries lambda_series(const GSetExplicit& x, int order,
                      long long multiset_cap = kDefaultMultisetCap);

/// (1 - t^base_m)^{-b} for an arbitrary rational exponent element b, computed
/// per ghost component: the class-K component is
///   prod_H prod_{K-orbits O on G/H} (1 - t^(base_m |O|))^{-coeff_H(b)}
/// with rational powers taken through formal exp/log, then pulled back one
/// degree at a time through the marks inversion. Agrees with lambda_series on
/// integral effective exponents with base_m = 1.
GSeries power_series(const Ctx& ctx, int base_m, const BurnsideElement& b, int order);

// Cauchy product, truncated at the smaller operand order.
GSeries mul_series(const GSeries& a, const GSeries& b);
// Multiplicative inverse; the constant term must be the ring unit [G/G].
GSeries inverse(const GSeries& a);

GSeries expand_product(const Ctx& ctx, const std::vector<ExponentTerm>& terms, int order);

// sum of m * exponent over the factor list: the degree of the product when
// each factor is read as (1 - t^m)^{-exponent}.
BurnsideElement degree_of_product(const Ctx& ctx, const std::vector<ExponentTerm>& terms);

// Coefficientwise point count: the classical scalar series underneath.
std::vector<Rat> forget_series(const GSeries& s);

} // namespace gzeta
