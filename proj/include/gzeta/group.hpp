#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gzeta {

// A permutation of {0..degree-1}, stored as its image vector.
using Perm = std::vector<int>;

// Function composition: (a*b)(i) = a(b(i)), i.e. b acts first.
Perm compose(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& p);

// "(0 1 2)(3 4)"; fixed points omitted, identity renders "()".
std::string cycle_string(const Perm& p);
// Accepts space- or comma-separated points inside parentheses.
Perm parse_cycles(const std::string& text, int degree);

inline constexpr int kDefaultGroupOrderCap = 512;

/// Finite group given by its full multiplication table. Element ids are
/// 0..order-1 with id 0 the identity. Groups built through this library
/// always retain the permutation representation they were generated from,
/// which is what makes cycle notation usable in input documents.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(int degree, std::vector<Perm> elements, std::string label);

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // g x g^-1
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int a) const;

    int degree() const { return degree_; }
    const Perm& perm_of(int id) const { return perms_[id]; }
    std::optional<int> element_of_perm(const Perm& p) const;

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    /// Exhaustive axiom check: identity, inverses, associativity on all
    /// triples. O(order^3); intended for tests and small groups.
    void validate() const;

private:
    int order_ = 0;
    int degree_ = 0;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<Perm> perms_;
    std::map<Perm, int> perm_index_;
    std::string label_;
};

/// Closure of the generators under composition, element ids assigned by
/// breadth-first search from the identity with generators applied in input
/// order. Throws SizeLimitError if the closure exceeds order_cap.
FiniteGroup build_group_from_permutations(int degree, const std::vector<Perm>& generators,
                                          int order_cap = kDefaultGroupOrderCap);

enum class GroupFamily { Cyclic, Symmetric, Dihedral };

/// The named family in its standard permutation representation. Symmetric is
/// limited to n <= 6; cyclic and dihedral to the default order cap.
FiniteGroup builtin_group(GroupFamily family, int n);
std::optional<GroupFamily> family_from_name(const std::string& name);

/// Subgroup as a sorted set of element ids. Always contains id 0.
struct Subgroup {
    std::vector<int> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int e) const;
    bool contains(const Subgroup& other) const;
    bool operator==(const Subgroup&) const = default;
    auto operator<=>(const Subgroup&) const = default;
};

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);
Subgroup subgroup_generated_by(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int by);
// Greedy minimal generating list, deterministic.
std::vector<int> generators_of(const FiniteGroup& g, const Subgroup& s);

struct SubgroupClass {
    Subgroup representative; // lexicographically least member set of the class
    std::vector<Subgroup> members;
    int normalizer_order = 0;
};

/// All subgroups of G partitioned into conjugacy classes. Classes are in
/// canonical order: ascending subgroup order, ties broken by the
/// lexicographically least representative member set. Class 0 is the trivial
/// subgroup, the last class is G itself.
class SubgroupClassTable {
public:
    SubgroupClassTable() = default;
    explicit SubgroupClassTable(std::vector<SubgroupClass> classes);

    int class_count() const { return static_cast<int>(classes_.size()); }
    const SubgroupClass& at(int h) const { return classes_[h]; }
    const std::vector<SubgroupClass>& classes() const { return classes_; }
    // -1 when the member set is not a subgroup known to the table.
    int index_of(const std::vector<int>& members) const;

private:
    std::vector<SubgroupClass> classes_;
    std::map<std::vector<int>, int> index_;
};

SubgroupClassTable enumerate_subgroup_classes(const FiniteGroup& g);

/// Index of the unique class containing S. Throws ValidationError if S is
/// not a subgroup of G.
int class_of(const FiniteGroup& g, const SubgroupClassTable& table, const Subgroup& s);

/// Simultaneous-conjugacy class of a nested pair Hhat <= H: two pairs are
/// identified iff a single group element conjugates both components at once.
/// The canonical form is the lexicographically least conjugate pair, so
/// PairClass values compare like ids.
struct PairClass {
    std::vector<int> h_members;
    std::vector<int> hhat_members;
    bool operator==(const PairClass&) const = default;
    auto operator<=>(const PairClass&) const = default;
};

PairClass pair_class_of(const FiniteGroup& g, const Subgroup& h, const Subgroup& hhat);

/// Table of marks: entry(K,H) = number of K-fixed points of the coset space
/// G/H, rows and columns indexed by subgroup classes in canonical order.
/// Upper triangular with positive diagonal |N_G(H)|/|H|.
struct TableOfMarks {
    int dim = 0;
    std::vector<long> entries; // row-major: entries[k * dim + h]

    long at(int k, int h) const { return entries[static_cast<size_t>(k) * dim + h]; }
};

TableOfMarks table_of_marks(const FiniteGroup& g, const SubgroupClassTable& table);

/// Sizes of the K-orbits on the left coset space G/H, ascending. They sum to
/// |G|/|H|.
std::vector<int> orbit_sizes_on_cosets(const FiniteGroup& g, const Subgroup& k, const Subgroup& h);

/// Conjugacy classes of group elements, each sorted, in canonical order:
/// ascending element order, then least member id.
std::vector<std::vector<int>> element_conjugacy_classes(const FiniteGroup& g);

} // namespace gzeta
