#include "k3deg/chamber.hpp"

#include "doctest.h"

#include <random>

using namespace k3deg;

TEST_CASE("reference vector")
{
    const RootSystem& rs = roots();
    const AVector r = rho(rs);
    CHECK(in_fundamental(r));
    CHECK(r.zero_set() == 0);
    CHECK(r.is_integral());
    CHECK(norm(rs, r) > 0);
}

TEST_CASE("reflections are isometric involutions")
{
    const RootSystem& rs = roots();
    const AVector r = rho(rs);
    for (int j = 0; j < kRoots; ++j) {
        const AVector s = reflect(rs, r, j);
        CHECK(s.a[j] == -r.a[j]);
        CHECK(norm(rs, s) == norm(rs, r));
        CHECK(reflect(rs, s, j).a == r.a);
        CHECK(satisfies_relations(rs, s));
    }
}

TEST_CASE("reduction of random Weyl images")
{
    const RootSystem& rs = roots();
    std::mt19937_64 rng(5);
    SampleOptions opt;
    opt.parity = false;
    opt.positive = true;
    for (int k = 0; k < 30; ++k) {
        const AVector v = sample_chamber_vector(rs, rng, opt);
        AVector w = v;
        for (int s = 0; s < 10; ++s) w = reflect(rs, w, static_cast<int>(rng() % kRoots));
        const Reduction red = reduce_to_fundamental(rs, w);
        CHECK(red.result.a == v.a);
        CHECK(in_fundamental(red.result));
        CHECK(red.certificate.size() == red.word.size() + 1);
        AVector replay = w;
        for (int j : red.word) replay = reflect(rs, replay, j);
        CHECK(replay.a == red.result.a);
    }
    CHECK(reduce_to_fundamental(rs, rho(rs)).word.empty());
}

TEST_CASE("vectors outside the positive cone are rejected")
{
    const RootSystem& rs = roots();
    AVector neg = rho(rs).scaled(-1);
    CHECK_THROWS_AS(reduce_to_fundamental(rs, neg), Error);
}

TEST_CASE("cone descriptors")
{
    const RootSystem& rs = roots();
    const ConeDescriptor interior = cone_of(rs, rho(rs));
    CHECK(interior.zero_set == 0);
    CHECK(interior.type == 3);
    CHECK(interior.cls == DiagramClass::Elliptic);

    std::map<int, Rat> ray;
    for (int i = 0; i < kCycle; ++i) ray[i] = 0;
    ray[18] = 2;
    const ConeDescriptor c = cone_of(rs, complete_a(rs, ray));
    CHECK(c.type == 2);
    CHECK(c.cls == DiagramClass::Parabolic);

    CHECK_THROWS_AS(cone_of(rs, reflect(rs, rho(rs), 0)), Error);
}

TEST_CASE("semifan cones depend on the relevant zero set only")
{
    const RootSystem& rs = roots();
    const SemifanCone a = semifan_cone(rs, rho(rs));
    CHECK(a.g == 0);
    CHECK(a == semifan_cone(rs, rho(rs).scaled(3)));
}

TEST_CASE("boundary divisors")
{
    const DivisorCount d = count_boundary_divisors(roots(), full_enumeration());
    CHECK(d.type2 == 3);
    CHECK(d.type3 == 35);
    CHECK(d.type2_reps.size() == 3);
    CHECK(d.type3_reps.size() == 35);
}

TEST_CASE("sampling honours its options")
{
    const RootSystem& rs = roots();
    std::mt19937_64 rng(9);
    SampleOptions opt;
    for (int k = 0; k < 20; ++k) {
        const AVector a = sample_chamber_vector(rs, rng, opt);
        CHECK(in_fundamental(a));
        CHECK(a.is_integral());
        CHECK(norm(rs, a) > 0);
        for (int i = 0; i <= 18; ++i) CHECK(a.a[i] <= 20);
        for (int i = 0; i < kRoots; ++i)
            if (i % 2 == 1 || i >= 18) CHECK(numerator(a.a[i]) % 2 == 0);
    }
}
