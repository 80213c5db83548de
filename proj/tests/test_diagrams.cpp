#include "k3deg/diagrams.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <set>

using namespace k3deg;

namespace {

bool oracle_elliptic(const RootSystem& rs, const std::vector<int>& v)
{
    oracle::Matrix m(v.size(), std::vector<oracle::BigInt>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = -rs(v[i], v[j]);
    return oracle::positive_definite(m);
}

}  // namespace

TEST_CASE("small ranks agree with brute force")
{
    const RootSystem& rs = roots();
    const EnumerationResult e = enumerate_elliptic(rs, 4);
    std::vector<long long> brute(5, 0);
    std::vector<std::set<Mask>> orbits(5);
    for (int a = 0; a < kRoots; ++a) {
        ++brute[1];
        orbits[1].insert(canonical_s3(mask_of({a})));
        for (int b = a + 1; b < kRoots; ++b) {
            if (!oracle_elliptic(rs, {a, b})) continue;
            ++brute[2];
            orbits[2].insert(canonical_s3(mask_of({a, b})));
            for (int c = b + 1; c < kRoots; ++c) {
                if (!oracle_elliptic(rs, {a, b, c})) continue;
                ++brute[3];
                orbits[3].insert(canonical_s3(mask_of({a, b, c})));
                for (int d = c + 1; d < kRoots; ++d)
                    if (oracle_elliptic(rs, {a, b, c, d})) {
                        ++brute[4];
                        orbits[4].insert(canonical_s3(mask_of({a, b, c, d})));
                    }
            }
        }
    }
    for (int r = 1; r <= 4; ++r) {
        CHECK(e.total[r] == brute[r]);
        CHECK(e.orbits[r] == static_cast<long long>(orbits[r].size()));
    }
    CHECK(e.orbits[1] == 6);
    CHECK(e.orbits[2] == 51);
    CHECK(e.orbits[3] == 328);
    CHECK(e.orbits[4] == 1518);
}

TEST_CASE("parallel enumeration matches the sequential one")
{
    const RootSystem& rs = roots();
    const EnumerationResult a = enumerate_elliptic(rs, 7, 1);
    const EnumerationResult b = enumerate_elliptic(rs, 7, 3);
    CHECK(a.total == b.total);
    CHECK(a.orbits == b.orbits);
    CHECK(a.representatives == b.representatives);
}

TEST_CASE("classification of named subdiagrams")
{
    const RootSystem& rs = roots();
    CHECK(definiteness(rs, mask_of(lists::affine_A17())) == DiagramClass::Parabolic);
    CHECK(definiteness(rs, mask_of(lists::affine_E8_1())) == DiagramClass::Parabolic);
    CHECK(definiteness(rs, mask_of({0, 1, 2})) == DiagramClass::Elliptic);
    CHECK(definiteness(rs, (Mask{1} << kRoots) - 1) == DiagramClass::Indefinite);

    CHECK(shape(rs, mask_of(lists::affine_A17())).ascii() == "~A17");
    CHECK(shape(rs, mask_of(lists::affine_D10())).ascii() == "~D10");
    CHECK(shape(rs, mask_of(lists::affine_E7())).ascii() == "~E7");
    CHECK(shape(rs, mask_of(lists::affine_A1_star())).ascii() == "~A1*");
    CHECK(shape(rs, mask_of({23})).ascii() == "irr:vA1-");
    CHECK(shape(rs, mask_of({23})).dynkin_type() == "A1");

    const Subdiagram s = classify(rs, mask_of({0, 1, 5}));
    CHECK(s.cls == DiagramClass::Elliptic);
    CHECK(s.rank == 3);
    CHECK(s.components.size() == 2);
}

TEST_CASE("shape labels round-trip through text")
{
    const RootSystem& rs = roots();
    for (Mask m : connected_catalog(rs).elliptic) {
        const ShapeLabel s = shape(rs, m);
        CHECK(parse_shape(s.ascii()) == s);
        CHECK(s.dynkin_type().size() >= 2);
    }
    CHECK_THROWS_AS(parse_shape("Q7"), Error);
}

TEST_CASE("symmetry groups")
{
    const RootSystem& rs = roots();
    const SymmetryAction g = automorphism_group(rs);
    CHECK(g.s3.size() == 6);
    CHECK(g.d9.size() == 18);
    const Mask m = mask_of({1, 2, 19});
    for (Mask x : s3_orbit(m)) CHECK(canonical_s3(x) == canonical_s3(m));
}

TEST_CASE("maximal parabolic subdiagrams")
{
    const RootSystem& rs = roots();
    const ParabolicSurvey s = survey_parabolics(rs);
    CHECK(s.maximal_mod_s3.size() == 4);
    CHECK(s.all_contained);
    for (Mask m : s.maximal) {
        CHECK(definiteness(rs, m) == DiagramClass::Parabolic);
        int rank = 0;
        for (Mask c : components(rs, m)) rank += popcount(c) - 1;
        CHECK(rank == 17);
    }
}
