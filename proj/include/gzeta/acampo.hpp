#pragma once

#include "gzeta/eqtop.hpp"

#include <string>
#include <vector>

namespace gzeta {

/// One stratum of an equivariant resolution where the pulled-back function is
/// locally z1^m: its multiplicity m, the isotropy subgroup H of its points,
/// the kernel Hhat of the normal-slice representation, and its Euler
/// characteristic. For a genuine resolution Hhat is normal in H with H/Hhat
/// cyclic of order dividing m.
struct ResolutionStratum {
    int m = 1;
    Subgroup isotropy;     // H
    Subgroup slice_kernel; // Hhat
    long long euler = 0;
};

struct StratumCheck {
    bool ok = true;
    std::vector<std::string> issues;
};

StratumCheck validate_stratum(const Ctx& ctx, const ResolutionStratum& s);

struct ZetaResult {
    std::vector<ExponentTerm> factors; // merged per (m, class of Hhat), ordered
    GSeries series;                    // product expanded to the requested order
    BurnsideElement degree;            // degree_of_product(factors)
    std::vector<Rat> classical_zeta;   // coefficientwise point count of series
    std::vector<std::string> warnings; // stratum diagnostics in non-strict mode
};

/// Monodromy zeta function from resolution strata: one factor
/// (1 - t^m)^{-(|Hhat| chi / |G|) [G/Hhat]} per stratum, merged per
/// (m, class of Hhat). Strict mode rejects invalid strata; non-strict mode
/// demotes every diagnostic except containment to a warning.
ZetaResult zeta_acampo(const Ctx& ctx, const std::vector<ResolutionStratum>& strata, int order,
                       bool strict = true);

// Lefschetz number of the k-th monodromy power:
// sum over strata with m | k of (m |Hhat| / |G|) chi [G/Hhat].
BurnsideElement lefschetz_from_strata(const Ctx& ctx,
                                      const std::vector<ResolutionStratum>& strata, int k);

// Equivariant Euler characteristic of the Milnor fibre:
// sum over all strata of (m |Hhat| / |G|) chi [G/Hhat]. Always equals the
// degree of the zeta product.
BurnsideElement milnor_fibre_euler(const Ctx& ctx,
                                   const std::vector<ResolutionStratum>& strata);

} // namespace gzeta
