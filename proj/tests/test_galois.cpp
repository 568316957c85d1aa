#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagcat/criterion.hpp"
#include "diagcat/galois.hpp"
#include "support.hpp"

using namespace diagcat;
using namespace diagcat::testsupport;

namespace {

std::vector<std::size_t> orbit_map(const FiniteGroup& g, const GSet& b, std::size_t b0) {
    // the equivariant map regular -> B with 1 -> b0: a -> a.b0
    std::vector<std::size_t> phi(g.order);
    for (std::size_t a = 0; a < g.order; ++a) phi[a] = b.action[a][b0];
    return phi;
}

std::vector<std::vector<std::size_t>> c2xc2_table() {
    // Klein four group as bitwise xor on {0,1,2,3}
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return t;
}

}  // namespace

TEST_CASE("group table validation") {
    CHECK_NOTHROW(FiniteGroup::from_table(cyclic_table(4)));
    CHECK_NOTHROW(FiniteGroup::from_table(s3_table()));
    CHECK_NOTHROW(FiniteGroup::from_table(c2xc2_table()));
    // constant table: no identity
    CHECK_THROWS(FiniteGroup::from_table({{0, 0}, {0, 0}}));
    // identity present but not associative / no inverses
    CHECK_THROWS(FiniteGroup::from_table({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}));
    auto c4 = FiniteGroup::from_table(cyclic_table(4));
    CHECK(c4.identity == 0);
    CHECK(c4.inverse(1) == 3);
}

TEST_CASE("g-set validation") {
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    GSet swap{2, {{0, 1}, {1, 0}}};
    CHECK(swap.validate(c2).empty());
    GSet bad{2, {{0, 1}, {0, 0}}};  // not invertible, breaks compatibility
    CHECK_FALSE(bad.validate(c2).empty());
    CHECK(GSet::regular(c2).validate(c2).empty());
    CHECK(GSet::trivial(c2, 3).validate(c2).empty());
}

TEST_CASE("group algebra of small groups is associative and unital") {
    for (auto table : {cyclic_table(1), cyclic_table(2), cyclic_table(3), cyclic_table(4),
                       c2xc2_table(), s3_table()}) {
        auto g = FiniteGroup::from_table(table);
        auto a = group_algebra<Int>(g);
        CHECK(a.dim == g.order);
        CHECK(a.is_associative());
        CHECK(a.is_unital());
    }
}

TEST_CASE("group algebra structure mirrors the table") {
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    auto a = group_algebra<Int>(c2);
    CHECK(a.dim == 1 + 1);
    // s * s = e
    CHECK(a.structure[1][1] == std::vector<Int>{1, 0});

    auto s3 = group_algebra<Int>(FiniteGroup::from_table(s3_table()));
    bool noncommutative = false;
    for (std::size_t i = 0; i < 6 && !noncommutative; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (s3.structure[i][j] != s3.structure[j][i]) {
                noncommutative = true;
                break;
            }
    CHECK(noncommutative);
}

TEST_CASE("permutation modules verify over the group algebra") {
    for (auto table : {cyclic_table(3), s3_table()}) {
        auto g = FiniteGroup::from_table(table);
        auto alg = group_algebra<Int>(g);
        CHECK(permutation_module<Int>(g, GSet::regular(g)).verify(alg).empty());
        CHECK(permutation_module<Int>(g, GSet::trivial(g, 2)).verify(alg).empty());
    }
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    auto m = permutation_module<Int>(c2, GSet{2, {{0, 1}, {1, 0}}});
    CHECK(m.action[1] == IntMat(2, 2, {0, 1, 1, 0}));
    // trivial G-set: every element acts as the identity
    auto tm = permutation_module<Int>(c2, GSet::trivial(c2, 3));
    CHECK(tm.action[1] == IntMat::identity(3));
}

TEST_CASE("regular stage commutant has dimension |G| and matches the oracle") {
    for (auto table : {cyclic_table(2), cyclic_table(3), s3_table()}) {
        auto g = FiniteGroup::from_table(table);
        GSet reg = GSet::regular(g);
        auto t = build_galois_diagram<Int>(g, reg, {orbit_map(g, reg, g.identity)});
        auto alg = compute_end(t, t.diagram);
        CHECK(alg.dim() == g.order);
        CHECK(alg.dim() == brute_force_commutant_nullity(t, t.diagram));
        auto cmp = compare_with_group_algebra(alg, g, reg, reg);
        CHECK(cmp.injective);
        CHECK(cmp.surjective);
        CHECK(cmp.algebra_hom);
    }
}

TEST_CASE("one-point target stage cross-checks against the oracle") {
    auto g = FiniteGroup::from_table(s3_table());
    GSet pt = GSet::trivial(g, 1);
    auto t = build_galois_diagram<Int>(g, pt, {orbit_map(g, pt, 0)});
    auto alg = compute_end(t, t.diagram);
    CHECK(alg.dim() == brute_force_commutant_nullity(t, t.diagram));
    auto cmp = compare_with_group_algebra(alg, g, GSet::regular(g), pt);
    CHECK(cmp.injective);
    CHECK(cmp.algebra_hom);
}

TEST_CASE("C2 on the two-point swap gives a two-dimensional commutant") {
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    GSet swap{2, {{0, 1}, {1, 0}}};
    auto t = build_galois_diagram<Int>(c2, swap, {orbit_map(c2, swap, 0)});
    auto alg = compute_end(t, t.diagram);
    CHECK(alg.dim() == 2);
    auto cmp = compare_with_group_algebra(alg, c2, GSet::regular(c2), swap);
    CHECK(cmp.injective);
    CHECK(cmp.surjective);
    CHECK(cmp.algebra_hom);
}

TEST_CASE("non-equivariant maps are rejected") {
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    GSet swap{2, {{0, 1}, {1, 0}}};
    CHECK_THROWS(build_galois_diagram<Int>(c2, swap, {{0, 0}}));
}

TEST_CASE("a trivially acting stage maps R[G] onto the scalars") {
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    GSet triv2 = GSet::trivial(c2, 2), triv1 = GSet::trivial(c2, 1);
    // loops act trivially; the commutant is much bigger than the image
    RepZ t;
    t.diagram.objects = {"pl", "pb"};
    t.values["pl"] = 2;
    t.values["pb"] = 1;
    t.diagram.arrows = {{"g0", "pl", "pl"}, {"g1", "pl", "pl"}};
    t.matrices["g0"] = IntMat::identity(2);
    t.matrices["g1"] = IntMat::identity(2);
    auto alg = compute_end(t, t.diagram);
    CHECK(alg.dim() == 5);  // all of M2 on pl, a scalar on pb
    auto cmp = compare_with_group_algebra(alg, c2, triv2, triv1);
    CHECK(cmp.image_rank == 1);
    CHECK_FALSE(cmp.injective);
    CHECK_FALSE(cmp.surjective);
    CHECK(cmp.algebra_hom);
}

TEST_CASE("faithful multi-orbit target stays injective") {
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    GSet b{3, {{0, 1, 2}, {1, 0, 2}}};  // swap orbit plus a fixed point
    CHECK(b.validate(c2).empty());
    auto t = build_galois_diagram<Int>(c2, b, {orbit_map(c2, b, 0), orbit_map(c2, b, 2)});
    auto alg = compute_end(t, t.diagram);
    auto cmp = compare_with_group_algebra(alg, c2, GSet::regular(c2), b);
    CHECK(cmp.injective);
    CHECK(cmp.image_rank == 2);
    CHECK(cmp.algebra_hom);
    CHECK(cmp.surjective == (alg.dim() == 2));
}

TEST_CASE("coproduct witness object does not change the commutant dimension") {
    auto c2 = FiniteGroup::from_table(cyclic_table(2));
    GSet reg = GSet::regular(c2);
    auto plain = build_galois_diagram<Int>(c2, reg, {orbit_map(c2, reg, 0)});
    auto with = build_galois_diagram<Int>(c2, reg, {orbit_map(c2, reg, 0)}, true);
    auto alg1 = compute_end(plain, plain.diagram);
    auto alg2 = compute_end(with, with.diagram);
    CHECK(alg1.dim() == alg2.dim());
    auto cond_a = check_condition_a(with);
    REQUIRE(cond_a.size() == 1);
    CHECK(cond_a[0].status == CheckStatus::PASS);
    auto cmp = compare_with_group_algebra(alg2, c2, reg, reg);
    CHECK(cmp.injective);
    CHECK(cmp.surjective);
}

TEST_CASE("equivariant maps have invariant kernels at the Galois stage") {
    std::mt19937 rng(601);
    for (auto table : {cyclic_table(2), cyclic_table(4), s3_table()}) {
        auto g = FiniteGroup::from_table(table);
        auto galg = group_algebra<Int>(g);
        GSet b = GSet::trivial(g, 2);
        auto t = build_galois_diagram<Int>(g, b, {orbit_map(g, b, 0)});
        auto alg = compute_end(t, t.diagram);
        // random equivariant maps out of the regular module
        Module<Int> src = permutation_module<Int>(g, GSet::regular(g));
        for (const GSet& tgt_set : {GSet::regular(g), b}) {
            Module<Int> tgt = permutation_module<Int>(g, tgt_set);
            IntMat basis = linear_map_space(src, tgt);
            std::uniform_int_distribution<int> coeff(-2, 2);
            for (int it = 0; it < 5; ++it) {
                IntMat f(tgt.gens, src.gens);
                for (std::size_t j = 0; j < basis.cols(); ++j)
                    f = f + unvectorize(basis.column(j), tgt.gens, src.gens)
                                .scaled(Int(coeff(rng)));
                auto res = check_condition_c(t, alg, "pl", f, IntMat(f.rows(), 0));
                CHECK(res.status == CheckStatus::PASS);
            }
        }
    }
}
