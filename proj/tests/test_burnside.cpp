#include "doctest.h"

#include "gzeta/burnside.hpp"

#include <algorithm>
#include <random>

using namespace gzeta;

namespace {

Ctx make_ctx(GroupFamily fam, int n) { return BurnsideContext::make(builtin_group(fam, n)); }

Ctx z6_ctx() {
    static Ctx ctx = make_ctx(GroupFamily::Cyclic, 6);
    return ctx;
}

Ctx s3_ctx() {
    static Ctx ctx = make_ctx(GroupFamily::Symmetric, 3);
    return ctx;
}

BurnsideElement random_integral(const Ctx& ctx, std::mt19937& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Rat> c(ctx->class_count());
    for (auto& q : c) q = dist(rng);
    return BurnsideElement(ctx, std::move(c));
}

// independent coset-space oracle: left cosets built from nothing but the
// multiplication table
std::vector<std::vector<int>> cosets_oracle(const FiniteGroup& g, const Subgroup& h) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.order(), false);
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<int> coset;
        for (int e : h.members) coset.push_back(g.mul(x, e));
        std::sort(coset.begin(), coset.end());
        for (int e : coset) seen[e] = true;
        out.push_back(std::move(coset));
    }
    return out;
}

long fixed_cosets_oracle(const FiniteGroup& g, const Subgroup& k,
                         const std::vector<std::vector<int>>& cosets) {
    long fixed = 0;
    for (const auto& coset : cosets) {
        bool fix = true;
        for (int e : k.members) {
            std::vector<int> img;
            for (int x : coset) img.push_back(g.mul(e, x));
            std::sort(img.begin(), img.end());
            if (img != coset) {
                fix = false;
                break;
            }
        }
        if (fix) ++fixed;
    }
    return fixed;
}

} // namespace

TEST_CASE("ghost of basis elements matches direct coset fixed-point counts") {
    auto ctx = s3_ctx();
    // [S3/Z2] -> (3, 1, 0, 0)
    auto ghost = to_ghost(BurnsideElement::basis(ctx, 1));
    CHECK(ghost == GhostVector{3, 1, 0, 0});

    // and the same numbers from scratch, for every class pair
    for (int h = 0; h < ctx->class_count(); ++h) {
        auto cosets = cosets_oracle(ctx->group(), ctx->classes().at(h).representative);
        auto g = to_ghost(BurnsideElement::basis(ctx, h));
        for (int k = 0; k < ctx->class_count(); ++k)
            CHECK(g[k] ==
                  fixed_cosets_oracle(ctx->group(), ctx->classes().at(k).representative, cosets));
    }
}

TEST_CASE("ghost of the unit is all ones; ghost of zero is zero") {
    auto ctx = z6_ctx();
    CHECK(to_ghost(BurnsideElement::unit(ctx)) == GhostVector{1, 1, 1, 1});
    CHECK(to_ghost(BurnsideElement::zero(ctx)) == GhostVector{0, 0, 0, 0});
}

TEST_CASE("from_ghost inverts to_ghost") {
    auto ctx = z6_ctx();
    CHECK(from_ghost(ctx, {1, 1, 1, 1}) == BurnsideElement::unit(ctx));
    // (1,0,1,0) -> (1/2)[Z6/Z3]
    auto half_z3 = frac(1, 2) * BurnsideElement::basis(ctx, 2);
    CHECK(from_ghost(ctx, {1, 0, 1, 0}) == half_z3);

    std::mt19937 rng(20240811);
    for (int i = 0; i < 100; ++i) {
        auto b = random_integral(ctx, rng);
        CHECK(from_ghost(ctx, to_ghost(b)) == b);
    }
}

TEST_CASE("multiplication is the cartesian product") {
    auto z6 = z6_ctx();
    auto b = frac(3, 7) * BurnsideElement::basis(z6, 1) - BurnsideElement::basis(z6, 2);
    CHECK(mul(BurnsideElement::unit(z6), b) == b);

    // [Z6/Z3]^2 = 2 [Z6/Z3], via explicit product of the coset G-set
    auto z3set = GSetExplicit::coset_space(z6, 2);
    CHECK(gset_decompose(cartesian_product(z3set, z3set)) ==
          Rat(2) * BurnsideElement::basis(z6, 2));
    CHECK(mul(BurnsideElement::basis(z6, 2), BurnsideElement::basis(z6, 2)) ==
          Rat(2) * BurnsideElement::basis(z6, 2));

    // [S3/(e)]^2 = 6 [S3/(e)]
    auto s3 = s3_ctx();
    auto reg = GSetExplicit::regular(s3);
    CHECK(gset_decompose(cartesian_product(reg, reg)) == Rat(6) * BurnsideElement::basis(s3, 0));
    CHECK(mul(BurnsideElement::basis(s3, 0), BurnsideElement::basis(s3, 0)) ==
          Rat(6) * BurnsideElement::basis(s3, 0));

    CHECK_THROWS_AS(mul(BurnsideElement::unit(z6), BurnsideElement::unit(s3)), ValidationError);
}

TEST_CASE("ghost map is a ring homomorphism") {
    std::mt19937 rng(7);
    for (auto ctx : {z6_ctx(), s3_ctx()}) {
        for (int i = 0; i < 50; ++i) {
            auto a = random_integral(ctx, rng);
            auto b = random_integral(ctx, rng);
            auto ga = to_ghost(a), gb = to_ghost(b), gab = to_ghost(mul(a, b));
            for (size_t k = 0; k < ga.size(); ++k) CHECK(gab[k] == ga[k] * gb[k]);
        }
    }
}

TEST_CASE("gset_decompose") {
    auto s3 = s3_ctx();
    CHECK(gset_decompose(GSetExplicit::regular(s3)) == BurnsideElement::basis(s3, 0));
    CHECK(gset_decompose(GSetExplicit::natural(s3)) == BurnsideElement::basis(s3, 1));
    CHECK(gset_decompose(GSetExplicit::empty(s3)) == BurnsideElement::zero(s3));
    CHECK(gset_decompose(GSetExplicit::one_point(s3)) == BurnsideElement::unit(s3));
    CHECK(gset_decompose(GSetExplicit::coset_space(s3, 2)) == BurnsideElement::basis(s3, 2));

    // decompose respects disjoint union
    auto x = GSetExplicit::natural(s3);
    auto y = GSetExplicit::regular(s3);
    CHECK(gset_decompose(disjoint_union(x, y)) == gset_decompose(x) + gset_decompose(y));

    // invalid action tables are rejected
    CHECK_THROWS_AS(gset_decompose(GSetExplicit(s3, 2, std::vector<int>(12, 0))),
                    ValidationError);
}

TEST_CASE("decompose is multiplicative over cartesian products") {
    auto s3 = s3_ctx();
    std::vector<GSetExplicit> sets{GSetExplicit::natural(s3), GSetExplicit::coset_space(s3, 2),
                                   GSetExplicit::one_point(s3), GSetExplicit::regular(s3)};
    for (const auto& a : sets)
        for (const auto& b : sets)
            CHECK(gset_decompose(cartesian_product(a, b)) ==
                  mul(gset_decompose(a), gset_decompose(b)));
    // X x point = X
    for (const auto& a : sets)
        CHECK(gset_decompose(cartesian_product(a, GSetExplicit::one_point(s3))) ==
              gset_decompose(a));
}

TEST_CASE("symmetric powers of explicit G-sets") {
    auto z6 = z6_ctx();
    auto z3set = GSetExplicit::coset_space(z6, 2); // two points
    // S^2(Z6/Z3) = [1] + [Z6/Z3]
    CHECK(gset_decompose(sym_power_explicit(z3set, 2)) ==
          BurnsideElement::unit(z6) + BurnsideElement::basis(z6, 2));
    // S^1 X = X
    CHECK(gset_decompose(sym_power_explicit(z3set, 1)) == gset_decompose(z3set));
    // S^0 X = point
    CHECK(gset_decompose(sym_power_explicit(z3set, 0)) == BurnsideElement::unit(z6));

    auto s3 = s3_ctx();
    auto nat = GSetExplicit::natural(s3);
    CHECK(gset_decompose(sym_power_explicit(nat, 2)) == Rat(2) * BurnsideElement::basis(s3, 1));

    CHECK_THROWS_AS(sym_power_explicit(GSetExplicit::regular(s3), 30, 1000), SizeLimitError);
}

TEST_CASE("forget_to_integer counts points") {
    auto z6 = z6_ctx();
    CHECK(forget_to_integer(BurnsideElement::unit(z6)) == 1);
    CHECK(forget_to_integer(BurnsideElement::basis(z6, 1)) == 3);
    CHECK(forget_to_integer(frac(1, 2) * BurnsideElement::basis(z6, 1)) == frac(3, 2));
    CHECK(forget_to_integer(frac(1, 2) * BurnsideElement::basis(z6, 2)) == 1);

    std::mt19937 rng(99);
    for (int i = 0; i < 20; ++i) {
        auto a = random_integral(z6, rng);
        auto b = random_integral(z6, rng);
        CHECK(forget_to_integer(mul(a, b)) == forget_to_integer(a) * forget_to_integer(b));
    }
}

TEST_CASE("permutation characters") {
    auto s3 = s3_ctx();
    // [G/G] is the trivial character
    CHECK(to_permutation_character(BurnsideElement::unit(s3)) == std::vector<Rat>{1, 1, 1});
    // [G/(e)] is the regular character
    CHECK(to_permutation_character(BurnsideElement::basis(s3, 0)) == std::vector<Rat>{6, 0, 0});
    // [S3/Z2] on (e, transpositions, 3-cycles)
    CHECK(to_permutation_character(BurnsideElement::basis(s3, 1)) == std::vector<Rat>{3, 1, 0});

    // multiplicative on all products of irreducibles
    for (int a = 0; a < s3->class_count(); ++a)
        for (int b = 0; b < s3->class_count(); ++b) {
            auto ca = to_permutation_character(BurnsideElement::basis(s3, a));
            auto cb = to_permutation_character(BurnsideElement::basis(s3, b));
            auto cab = to_permutation_character(
                mul(BurnsideElement::basis(s3, a), BurnsideElement::basis(s3, b)));
            for (size_t i = 0; i < ca.size(); ++i) CHECK(cab[i] == ca[i] * cb[i]);
        }
}

TEST_CASE("the character map has a kernel: Burnside classes are finer") {
    // -[S3/(e)] + 2[S3/Z2] + [S3/Z3] - 2[S3/S3] has permutation character 0
    // on every element class but is itself nonzero
    auto s3 = s3_ctx();
    auto k = Rat(-1) * BurnsideElement::basis(s3, 0) + Rat(2) * BurnsideElement::basis(s3, 1) +
             BurnsideElement::basis(s3, 2) - Rat(2) * BurnsideElement::basis(s3, 3);
    CHECK_FALSE(k.is_zero());
    CHECK(to_permutation_character(k) == std::vector<Rat>{0, 0, 0});
}

TEST_CASE("effectivity and integrality flags") {
    auto z6 = z6_ctx();
    CHECK(BurnsideElement::unit(z6).is_effective_integral());
    CHECK_FALSE((frac(1, 2) * BurnsideElement::basis(z6, 2)).is_effective_integral());
    CHECK((Rat(-1) * BurnsideElement::unit(z6)).is_integral());
    CHECK_FALSE((Rat(-1) * BurnsideElement::unit(z6)).is_effective_integral());
}
