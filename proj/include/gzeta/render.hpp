#pragma once

#include "gzeta/acampo.hpp"

#include <string>
#include <vector>

namespace gzeta {

// Display name of a subgroup class: "(e)" for the trivial class, the group
// label for the full class, "H<index>" otherwise.
std::string class_name(const BurnsideContext& ctx, int h_class);
std::string group_name(const BurnsideContext& ctx);

// "q1·[G/H1] + q2·[G/H2] + ..." in canonical class order, rationals in lowest
// terms; unit coefficients are left implicit, the zero element renders "0".
std::string render_element(const BurnsideElement& b);

// One line per power of t: "t^k: <element>".
std::string render_series(const GSeries& s);

// "(1-t^2)^{-1/2·[G/H2]}·(1-t^3)^{...}" in the given factor order; "1" when
// the list is empty. Displayed exponents carry the sign flip.
std::string render_factors(const std::vector<ExponentTerm>& factors);

// Space-separated coefficient list, degree 0 first.
std::string render_scalar_series(const std::vector<Rat>& coeffs);

} // namespace gzeta
