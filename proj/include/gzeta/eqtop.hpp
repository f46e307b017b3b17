#pragma once

#include "gzeta/series.hpp"

#include <utility>
#include <vector>

namespace gzeta {

/// One isotropy stratum of a G-space: the points whose stabilizer lies in the
/// subgroup class h, together with the stratum's Euler characteristic.
struct IsotropyStratum {
    int h_class = 0;
    long long euler = 0;
};

struct EquivariantEuler {
    BurnsideElement value;
    // Set when some coefficient chi * |H| / |G| came out fractional. For a
    // genuine action every coefficient equals chi(X_h / G), an integer, so a
    // warning here means the strata do not describe a real G-space.
    bool non_integral = false;
};

// chi_G(X) = sum over strata of (chi(X_h) |H| / |G|) [G/H]. At most one
// stratum per class; duplicates are an error.
EquivariantEuler euler_from_strata(const Ctx& ctx, const std::vector<IsotropyStratum>& strata);

// Alternating sum of cell classes; every cell set must be integral effective.
BurnsideElement euler_from_cells(const Ctx& ctx,
                                 const std::vector<std::pair<int, BurnsideElement>>& cells);

// Lefschetz number of a map whose fixed set has a single isotropy class:
// (lefschetz * |H| / |G|) [G/H].
BurnsideElement lefschetz_single_isotropy(const Ctx& ctx, long long lefschetz, int h_class);

/// Lefschetz numbers of map iterates: values[m-1] holds the number for the
/// m-th power of the map, m = 1..horizon with no gaps.
struct LefschetzSequence {
    std::vector<BurnsideElement> values;
    int horizon() const { return static_cast<int>(values.size()); }
};

struct SSequence {
    std::vector<BurnsideElement> values; // values[m-1] is s_m
    int horizon() const { return static_cast<int>(values.size()); }
};

// Divisor-lattice inversion: s_m = L_m - sum of s_d over proper divisors d
// of m, in ascending m.
SSequence s_from_lefschetz(const LefschetzSequence& l);
// The inverse direction: L_m = sum of s_d over all divisors d of m.
LefschetzSequence lefschetz_from_s(const SSequence& s);

struct ZetaProduct {
    std::vector<ExponentTerm> factors;
    GSeries series;
};

/// Zeta function of the map from its Lefschetz sequence: the product of
/// (1 - t^m)^{-s_m/m}, expanded to the requested order. The factor list is
/// normalized to one term per (m, subgroup class) pair with zero terms
/// dropped, ordered by m then class. Requires order <= horizon.
ZetaProduct zeta_from_lefschetz(const LefschetzSequence& l, int order);

// Sum of all s_m; meaningful when the sequence has full finite support
// within its horizon.
BurnsideElement degree_from_s(const SSequence& s);

// The shared factor normal form: split each (m, exponent) into single-class
// terms, merge by (m, class), drop zeros, order by m then class.
std::vector<ExponentTerm> normalize_factors(const Ctx& ctx,
                                            const std::vector<std::pair<int, BurnsideElement>>& raw);

} // namespace gzeta
