#include "k3deg/lattice.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace k3deg;

namespace {

oracle::Matrix gram_matrix(const RootSystem& rs)
{
    oracle::Matrix m(kRoots, std::vector<oracle::BigInt>(kRoots));
    for (int i = 0; i < kRoots; ++i)
        for (int j = 0; j < kRoots; ++j) m[i][j] = rs(i, j);
    return m;
}

AVector column(const RootSystem& rs, int j)
{
    AVector a;
    for (int i = 0; i < kRoots; ++i) a.a[i] = rs(i, j);
    return a;
}

std::map<int, Rat> worked_example_partial()
{
    std::map<int, Rat> p;
    for (int i : {18, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}) p[i] = 0;
    p[17] = 6;
    return p;
}

}  // namespace

TEST_CASE("Gram matrix shape")
{
    const RootSystem& rs = roots();
    for (int i = 0; i < kRoots; ++i) {
        CHECK(rs(i, i) == -2);
        for (int j = 0; j < kRoots; ++j) CHECK(rs(i, j) == rs(j, i));
    }
    for (int i = 0; i < kCycle; ++i) {
        CHECK(rs(i, (i + 1) % kCycle) == 1);
        CHECK(rs(i, (i + 2) % kCycle) == 0);
    }
    // N has rank 19, so the 24 roots satisfy five independent relations.
    CHECK(oracle::rank(gram_matrix(rs)) == 19);
    CHECK(relation_basis(rs).size() == 5);
    CHECK(verify_relations(rs));
}

TEST_CASE("diagram symmetries preserve the Gram matrix")
{
    const RootSystem& rs = roots();
    for (const auto& p : {rotation_perm(), reflection_perm()})
        for (int i = 0; i < kRoots; ++i)
            for (int j = 0; j < kRoots; ++j) CHECK(rs(p[i], p[j]) == rs(i, j));
    const auto rot = rotation_perm();
    CHECK(rot[0] == 6);
    CHECK(rot[18] != 18);
}

TEST_CASE("null vectors of affine components")
{
    const RootSystem& rs = roots();
    const std::vector<int> cycle = lists::affine_A17();
    CHECK(null_vector(rs, cycle) == IntVec(kCycle, 1));
    CHECK(null_vector(rs, lists::affine_E8_1()) == IntVec{1, 2, 3, 4, 5, 6, 4, 2, 3});

    for (const auto& comp : {lists::affine_D10(), lists::affine_E7(), lists::affine_E8_2(), lists::affine_D16(),
                             lists::affine_A1_irr(), lists::affine_A1_star()}) {
        const IntVec n = null_vector(rs, comp);
        Int g = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            CHECK(n[i] > 0);
            g = gcd(g, n[i]);
            Int s = 0;
            for (std::size_t j = 0; j < comp.size(); ++j) s += rs(comp[i], comp[j]) * n[j];
            CHECK(s == 0);
        }
        CHECK(g == 1);
    }
}

TEST_CASE("a-coordinates of a root recover its square and pairings")
{
    const RootSystem& rs = roots();
    for (int j = 0; j < kRoots; ++j) {
        const AVector a = column(rs, j);
        CHECK(satisfies_relations(rs, a));
        CHECK(norm(rs, a) == -2);
        for (int k = 0; k < kRoots; k += 5) CHECK(pairing(rs, a, column(rs, k)) == rs(j, k));
    }
}

TEST_CASE("completion of the worked A18 example")
{
    const RootSystem& rs = roots();
    const AVector a = complete_a(rs, worked_example_partial());
    CHECK(a.is_integral());
    CHECK(a.a[17] == 6);
    CHECK(a.a[19] == 10);
    CHECK(a.a[20] == 8);
    CHECK(a.a[21] == 30);
    CHECK(a.a[22] == 14);
    CHECK(a.a[23] == 22);
    CHECK(norm(rs, a) == 38);
    CHECK(a.zero_set() == mask_of({18, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}));

    std::map<int, Rat> too_few{{0, 1}};
    CHECK_THROWS_AS(complete_a(rs, too_few), Error);
}

TEST_CASE("discriminants of chains")
{
    const RootSystem& rs = roots();
    for (int n = 1; n <= 17; ++n) {
        std::vector<int> chain;
        for (int i = 1; i <= n; ++i) chain.push_back(i);
        const RankDisc d = rank_and_discriminant(rs, mask_of(chain));
        CHECK(d.rank == n);
        Int order = 1;
        for (const Int& f : d.invariant_factors) order *= f;
        CHECK(order == n + 1);
    }
}

TEST_CASE("saturation in the dual lattice")
{
    const RootSystem& rs = roots();
    CHECK(dual_lattice().index_over_N(rs) == 2);
    CHECK(saturation_quotient(rs, mask_of({23})) == IntVec{2});
    std::vector<int> a17;
    for (int i = 1; i <= 17; ++i) a17.push_back(i);
    CHECK(saturation_quotient(rs, mask_of(a17)) == IntVec{6});
    CHECK(saturation_quotient(rs, mask_of({0})).empty());
}

TEST_CASE("JSON forms")
{
    const RootSystem& rs = roots();
    const auto g = to_json(rs);
    CHECK(g["gram"].size() == kRoots);
    CHECK(g["gram"][3][4] == 1);
    const auto a = to_json(complete_a(rs, worked_example_partial()));
    CHECK(a["a"][21] == 30);
    CHECK(a["b"][17] == 3);
    CHECK(a["bbar"][6] == 5);
}
