#pragma once

#include "gzeta/error.hpp"
#include "gzeta/group.hpp"
#include "gzeta/rational.hpp"

#include <memory>
#include <vector>

namespace gzeta {

// Vector of fixed-point counts, one rational per subgroup class.
using GhostVector = std::vector<Rat>;

inline constexpr long long kDefaultMultisetCap = 1'000'000;

/// Immutable bundle shared by every value attached to one group: the group
/// itself, its subgroup classification, the table of marks, plus the orbit
/// and character data the series machinery keeps asking for. Construct once
/// per group via make(); everything downstream holds a shared_ptr to it.
class BurnsideContext {
public:
    static std::shared_ptr<const BurnsideContext> make(FiniteGroup g);

    const FiniteGroup& group() const { return group_; }
    const SubgroupClassTable& classes() const { return classes_; }
    const TableOfMarks& marks() const { return marks_; }

    int class_count() const { return classes_.class_count(); }
    int trivial_class() const { return 0; }
    int full_class() const { return class_count() - 1; }
    int class_of(const Subgroup& s) const;

    // Orbit sizes of the class-k representative acting on cosets of the
    // class-h representative; ascending, summing to |G|/|H|.
    const std::vector<int>& coset_orbit_sizes(int k_class, int h_class) const;

    const std::vector<std::vector<int>>& element_classes() const { return element_classes_; }
    // Number of cosets of the class-h representative fixed by the element.
    long fixed_cosets(int element, int h_class) const;

private:
    explicit BurnsideContext(FiniteGroup g);

    FiniteGroup group_;
    SubgroupClassTable classes_;
    TableOfMarks marks_;
    std::vector<std::vector<int>> orbit_sizes_;        // [k * dim + h]
    std::vector<std::vector<int>> element_classes_;
    std::vector<std::vector<long>> coset_fixed_;  // [h][element]
};

using Ctx = std::shared_ptr<const BurnsideContext>;

// Throws ValidationError unless both values live in the same context.
void require_same_context(const Ctx& a, const Ctx& b);

/// Element of K0(finite G-sets) tensored with Q: one exact rational
/// coefficient per subgroup class, the class-h coordinate being the
/// multiplicity of the transitive set [G/H].
class BurnsideElement {
public:
    BurnsideElement() = default;
    BurnsideElement(Ctx ctx, std::vector<Rat> coeffs);

    static BurnsideElement zero(const Ctx& ctx);
    static BurnsideElement basis(const Ctx& ctx, int h_class); // [G/H]
    static BurnsideElement unit(const Ctx& ctx);               // [G/G]

    const Ctx& context() const { return ctx_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(int h) const { return coeffs_[h]; }

    bool is_zero() const;
    bool is_integral() const;
    // All coefficients non-negative integers: the class of an honest G-set.
    bool is_effective_integral() const;

    BurnsideElement& operator+=(const BurnsideElement& rhs);
    BurnsideElement& operator-=(const BurnsideElement& rhs);
    BurnsideElement& operator*=(const Rat& s);
    friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
    friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
    friend BurnsideElement operator-(BurnsideElement a);
    friend BurnsideElement operator*(BurnsideElement a, const Rat& s) { return a *= s; }
    friend BurnsideElement operator*(const Rat& s, BurnsideElement a) { return a *= s; }
    BurnsideElement operator*(const BurnsideElement& rhs) const;

    bool operator==(const BurnsideElement& rhs) const;

private:
    Ctx ctx_;
    std::vector<Rat> coeffs_;
};

// Marks pairing: component at class K is sum over H of coeff_H * mark(K,H).
// Injective ring homomorphism onto componentwise arithmetic.
GhostVector to_ghost(const BurnsideElement& b);
// Unique preimage, by back-substitution on the triangular table of marks.
BurnsideElement from_ghost(const Ctx& ctx, const GhostVector& v);
BurnsideElement mul(const BurnsideElement& a, const BurnsideElement& b);

// Number of points, extended linearly: sum of coeff_H * |G|/|H|.
Rat forget_to_integer(const BurnsideElement& b);

// Permutation character values, one per element conjugacy class in canonical
// order; [G/H] maps to the character of the induced trivial representation.
std::vector<Rat> to_permutation_character(const BurnsideElement& b);

/// A concrete finite G-set: points 0..size-1 with a full action table.
class GSetExplicit {
public:
    GSetExplicit(Ctx ctx, int points, std::vector<int> action);

    static GSetExplicit empty(const Ctx& ctx);
    static GSetExplicit one_point(const Ctx& ctx);
    static GSetExplicit regular(const Ctx& ctx);                // G on itself, left translation
    static GSetExplicit natural(const Ctx& ctx);                // permutation action on 0..degree-1
    static GSetExplicit coset_space(const Ctx& ctx, const Subgroup& h);
    static GSetExplicit coset_space(const Ctx& ctx, int h_class);

    const Ctx& context() const { return ctx_; }
    int size() const { return size_; }
    int apply(int g, int x) const { return action_[static_cast<size_t>(g) * size_ + x]; }

    // Exhaustive action-axiom check; throws ValidationError.
    void validate() const;

private:
    Ctx ctx_;
    int size_ = 0;
    std::vector<int> action_; // [g * size + x]
};

GSetExplicit cartesian_product(const GSetExplicit& x, const GSetExplicit& y);
GSetExplicit disjoint_union(const GSetExplicit& x, const GSetExplicit& y);

// Points are size-k multisets of points of X with the induced action.
// k = 0 gives a single fixed point.
GSetExplicit sym_power_explicit(const GSetExplicit& x, int k,
                                long long multiset_cap = kDefaultMultisetCap);

// Orbit decomposition into a non-negative integral combination of [G/H];
// cross-checked internally against direct fixed-point counts.
BurnsideElement gset_decompose(const GSetExplicit& x);

// Stabilizer subgroup of the point x.
Subgroup stabilizer(const GSetExplicit& x, int point);

} // namespace gzeta
