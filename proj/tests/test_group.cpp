#include "doctest.h"

#include "gzeta/error.hpp"
#include "gzeta/group.hpp"

#include <algorithm>
#include <set>

using namespace gzeta;

namespace {

FiniteGroup z6() { return builtin_group(GroupFamily::Cyclic, 6); }
FiniteGroup s3() { return builtin_group(GroupFamily::Symmetric, 3); }

// brute-force conjugacy of subgroups, independent of the class table
bool conjugate_by_search(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    for (int c = 0; c < g.order(); ++c)
        if (conjugate_subgroup(g, a, c) == b) return true;
    return false;
}

} // namespace

TEST_CASE("permutation closure builds the expected groups") {
    auto s = build_group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(s.order() == 6);
    s.validate();

    auto c6 = build_group_from_permutations(6, {{1, 2, 3, 4, 5, 0}});
    CHECK(c6.order() == 6);
    c6.validate();

    auto trivial = build_group_from_permutations(2, {});
    CHECK(trivial.order() == 1);

    CHECK_THROWS_AS(build_group_from_permutations(6, {{1, 2, 3, 4, 5, 0}}, 4), SizeLimitError);
}

TEST_CASE("builtin families") {
    CHECK(builtin_group(GroupFamily::Cyclic, 6).order() == 6);
    CHECK(builtin_group(GroupFamily::Symmetric, 3).order() == 6);
    CHECK(builtin_group(GroupFamily::Dihedral, 4).order() == 8);
    CHECK(builtin_group(GroupFamily::Dihedral, 1).order() == 2);
    CHECK(builtin_group(GroupFamily::Dihedral, 2).order() == 4);
    CHECK(builtin_group(GroupFamily::Cyclic, 1).order() == 1);
    CHECK_THROWS_AS(builtin_group(GroupFamily::Symmetric, 7), SizeLimitError);
    builtin_group(GroupFamily::Dihedral, 4).validate();
    builtin_group(GroupFamily::Dihedral, 2).validate();
}

TEST_CASE("cycle notation round trip") {
    Perm p = parse_cycles("(0 1 2)(3 4)", 5);
    CHECK(p == Perm{1, 2, 0, 4, 3});
    CHECK(cycle_string(p) == "(0 1 2)(3 4)");
    CHECK(cycle_string(Perm{0, 1}) == "()");
    CHECK(parse_cycles("(0,1)", 2) == Perm{1, 0});
    CHECK_THROWS_AS(parse_cycles("(0 7)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(0 0)", 3), ParseError);
}

TEST_CASE("subgroup classes of Z6") {
    auto g = z6();
    auto table = enumerate_subgroup_classes(g);
    REQUIRE(table.class_count() == 4);
    CHECK(table.at(0).representative.order() == 1);
    CHECK(table.at(1).representative.order() == 2);
    CHECK(table.at(2).representative.order() == 3);
    CHECK(table.at(3).representative.order() == 6);
    for (const auto& cls : table.classes()) CHECK(cls.members.size() == 1); // abelian
}

TEST_CASE("subgroup classes of S3") {
    auto g = s3();
    auto table = enumerate_subgroup_classes(g);
    REQUIRE(table.class_count() == 4);
    CHECK(table.at(0).representative.order() == 1);
    CHECK(table.at(1).representative.order() == 2);
    CHECK(table.at(1).members.size() == 3);
    CHECK(table.at(2).representative.order() == 3);
    CHECK(table.at(3).representative.order() == 6);

    // every subgroup in exactly one class, and Lagrange holds
    std::set<std::vector<int>> all;
    for (const auto& cls : table.classes())
        for (const auto& m : cls.members) {
            CHECK(all.insert(m.members).second);
            CHECK(g.order() % m.order() == 0);
        }
}

TEST_CASE("trivial group has one class") {
    auto g = builtin_group(GroupFamily::Cyclic, 1);
    auto table = enumerate_subgroup_classes(g);
    CHECK(table.class_count() == 1);
}

TEST_CASE("class_of basics and conjugation invariance") {
    auto g = s3();
    auto table = enumerate_subgroup_classes(g);

    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    CHECK(class_of(g, table, Subgroup{all}) == table.class_count() - 1);
    CHECK(class_of(g, table, Subgroup{{0}}) == 0);

    // the two transposition subgroups land in the same class; cross-check by
    // brute-force conjugation
    auto t1 = subgroup_generated_by(g, {1});
    int other = -1;
    for (int e = 1; e < g.order(); ++e)
        if (e != 1 && g.element_order(e) == 2) other = e;
    REQUIRE(other > 0);
    auto t2 = subgroup_generated_by(g, {other});
    CHECK(conjugate_by_search(g, t1, t2));
    CHECK(class_of(g, table, t1) == class_of(g, table, t2));

    // invariance under conjugation by every group element
    for (const auto& cls : table.classes())
        for (int c = 0; c < g.order(); ++c)
            CHECK(class_of(g, table, conjugate_subgroup(g, cls.representative, c)) ==
                  class_of(g, table, cls.representative));

    CHECK_THROWS_AS(class_of(g, table, Subgroup{{0, 1, 2}}), ValidationError);
}

TEST_CASE("pair classes under simultaneous conjugacy") {
    auto g = s3();
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    Subgroup whole{all};

    CHECK(pair_class_of(g, whole, whole) == pair_class_of(g, whole, whole));

    auto t1 = subgroup_generated_by(g, {1});
    int other = -1;
    for (int e = 1; e < g.order(); ++e)
        if (e != 1 && g.element_order(e) == 2) other = e;
    auto t2 = subgroup_generated_by(g, {other});
    CHECK(pair_class_of(g, t1, t1) == pair_class_of(g, t2, t2));
    CHECK(pair_class_of(g, t1, t1) != pair_class_of(g, t1, Subgroup{{0}}));

    CHECK_THROWS_AS(pair_class_of(g, t1, t2), ValidationError); // no containment

    // equal pair ids refine componentwise conjugacy
    auto table = enumerate_subgroup_classes(g);
    auto pc1 = pair_class_of(g, t1, Subgroup{{0}});
    auto pc2 = pair_class_of(g, t2, Subgroup{{0}});
    CHECK(pc1 == pc2);
    CHECK(class_of(g, table, Subgroup{pc1.h_members}) == class_of(g, table, t1));
}

TEST_CASE("table of marks for S3") {
    auto g = s3();
    auto table = enumerate_subgroup_classes(g);
    auto marks = table_of_marks(g, table);
    REQUIRE(marks.dim == 4);

    // column [S3/Z2]: 3 at (e), 1 at Z2, 0 elsewhere
    CHECK(marks.at(0, 1) == 3);
    CHECK(marks.at(1, 1) == 1);
    CHECK(marks.at(2, 1) == 0);
    CHECK(marks.at(3, 1) == 0);

    // column [G/G] is all ones
    for (int k = 0; k < 4; ++k) CHECK(marks.at(k, 3) == 1);
}

TEST_CASE("table of marks invariants across small groups") {
    for (auto g : {builtin_group(GroupFamily::Cyclic, 6), builtin_group(GroupFamily::Symmetric, 3),
                   builtin_group(GroupFamily::Dihedral, 4),
                   build_group_from_permutations(4, {parse_cycles("(0 1)", 4),
                                                     parse_cycles("(2 3)", 4)})}) {
        auto table = enumerate_subgroup_classes(g);
        auto marks = table_of_marks(g, table);
        for (int k = 0; k < marks.dim; ++k) {
            for (int h = 0; h < k; ++h) CHECK(marks.at(k, h) == 0); // triangular
            const auto& cls = table.at(k);
            CHECK(marks.at(k, k) == cls.normalizer_order / cls.representative.order());
            CHECK(marks.at(k, k) > 0);
        }
        // row (e) of the marks is |G|/|H|
        for (int h = 0; h < marks.dim; ++h)
            CHECK(marks.at(0, h) == g.order() / table.at(h).representative.order());
    }
}

TEST_CASE("Z6 marks column of Z2") {
    auto g = z6();
    auto table = enumerate_subgroup_classes(g);
    auto marks = table_of_marks(g, table);
    CHECK(marks.at(1, 1) == 3); // all three cosets fixed: quotient action is trivial
}

TEST_CASE("orbit sizes on cosets") {
    auto g = z6();
    Subgroup trivial{{0}};
    auto z2 = subgroup_generated_by(g, {3});
    auto z3 = subgroup_generated_by(g, {2});

    CHECK(orbit_sizes_on_cosets(g, trivial, trivial) == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(orbit_sizes_on_cosets(g, z2, z3) == std::vector<int>{2});
    CHECK(orbit_sizes_on_cosets(g, z2, z2) == std::vector<int>{1, 1, 1});

    // sizes always sum to |G|/|H|
    auto table = enumerate_subgroup_classes(g);
    for (const auto& k : table.classes())
        for (const auto& h : table.classes()) {
            auto sizes = orbit_sizes_on_cosets(g, k.representative, h.representative);
            int sum = 0;
            for (int s : sizes) sum += s;
            CHECK(sum == g.order() / h.representative.order());
        }
}

TEST_CASE("element conjugacy classes") {
    auto abelian = z6();
    auto classes = element_conjugacy_classes(abelian);
    CHECK(classes.size() == 6);
    for (const auto& c : classes) CHECK(c.size() == 1);

    auto sym = s3();
    auto sc = element_conjugacy_classes(sym);
    REQUIRE(sc.size() == 3);
    CHECK(sc[0].size() == 1);
    CHECK(sc[1].size() == 3);
    CHECK(sc[2].size() == 2);
    CHECK(sym.element_order(sc[1].front()) == 2);
    CHECK(sym.element_order(sc[2].front()) == 3);

    auto trivial = builtin_group(GroupFamily::Cyclic, 1);
    CHECK(element_conjugacy_classes(trivial).size() == 1);
}

TEST_CASE("D4 subgroup lattice") {
    auto g = builtin_group(GroupFamily::Dihedral, 4);
    auto table = enumerate_subgroup_classes(g);
    REQUIRE(table.class_count() == 8);
    std::vector<int> orders;
    for (const auto& cls : table.classes()) orders.push_back(cls.representative.order());
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 4, 4, 4, 8});

    // the two reflection classes are distinct from each other and from the
    // center; all reflections of one kind land in one class
    int r = -1, s = -1; // rotation, reflection with a fixed vertex
    for (int e = 1; e < g.order(); ++e) {
        if (g.element_order(e) == 4) r = e;
        if (g.element_order(e) == 2 && g.perm_of(e)[0] == 0 && s < 0) s = e;
    }
    REQUIRE(r >= 0);
    REQUIRE(s >= 0);
    int r2 = g.mul(r, r);
    int rs = g.mul(r, s);
    auto center = subgroup_generated_by(g, {r2});
    auto vertex_refl = subgroup_generated_by(g, {s});
    auto edge_refl = subgroup_generated_by(g, {rs});
    int c_center = class_of(g, table, center);
    int c_vertex = class_of(g, table, vertex_refl);
    int c_edge = class_of(g, table, edge_refl);
    CHECK(c_center != c_vertex);
    CHECK(c_center != c_edge);
    CHECK(c_vertex != c_edge);

    // vertex reflections are conjugate to each other by the rotation
    auto other_vertex = conjugate_subgroup(g, vertex_refl, r);
    CHECK(other_vertex != vertex_refl);
    CHECK(class_of(g, table, other_vertex) == c_vertex);

    // pair classes distinguish the two Klein-four subgroups over the center
    auto v_vertex = subgroup_generated_by(g, {r2, s});
    auto v_edge = subgroup_generated_by(g, {r2, rs});
    CHECK(class_of(g, table, v_vertex) != class_of(g, table, v_edge));
    CHECK(pair_class_of(g, v_vertex, center) != pair_class_of(g, v_edge, center));
}

TEST_CASE("subgroup helpers") {
    auto g = s3();
    CHECK(is_subgroup(g, {0}));
    CHECK_FALSE(is_subgroup(g, {}));
    CHECK_FALSE(is_subgroup(g, {1}));
    auto whole = subgroup_generated_by(g, {1, 2});
    CHECK(whole.order() == 6);
    auto gens = generators_of(g, whole);
    CHECK(subgroup_generated_by(g, gens) == whole);
}
