#include "k3deg/ias.hpp"

#include "doctest.h"

#include <random>

using namespace k3deg;

namespace {

AVector figure_eight()
{
    std::map<int, Rat> p;
    for (int i = 0; i < 21; ++i) p[i] = 2;
    return complete_a(roots(), p);
}

AVector worked_example()
{
    std::map<int, Rat> p;
    for (int i : {18, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}) p[i] = 0;
    p[17] = 6;
    return complete_a(roots(), p);
}

Rat shoelace_twice(const std::array<Point, kCycle>& c)
{
    Rat s = 0;
    for (int i = 0; i < kCycle; ++i) {
        const Point& p = c[i];
        const Point& q = c[(i + 1) % kCycle];
        s += p.x * q.y - p.y * q.x;
    }
    return s;
}

// Primitive integral direction of a rational segment and its lattice length.
std::pair<Point, Rat> primitive(const Point& d)
{
    const Int dx = denominator(d.x), dy = denominator(d.y);
    const Int den = dx / gcd(dx, dy) * dy;
    Int x = numerator(d.x * Rat(den)), y = numerator(d.y * Rat(den));
    const Int g = gcd(x, y);
    const Point prim{Rat(x / g), Rat(y / g)};
    const Rat len = prim.x != 0 ? d.x / prim.x : d.y / prim.y;
    return {prim, len};
}

Rat lattice_distance(const std::array<Point, kCycle>& c, int s, int t)
{
    const auto [dir, len] = primitive(c[s + 1] - c[s]);
    const Point gap = c[t] - c[s];
    const Rat d = dir.x * gap.y - dir.y * gap.x;
    return d < 0 ? -d : d;
}

}  // namespace

TEST_CASE("toric fan of the 18-gon")
{
    const ToricFan18& fan = build_fan();
    int sum = 0;
    for (int i = 0; i < kCycle; ++i) {
        const Point& a = fan.v[i];
        const Point& b = fan.v[(i + 1) % kCycle];
        CHECK(a.x * b.y - a.y * b.x == 1);
        const Point& prev = fan.v[(i + kCycle - 1) % kCycle];
        CHECK(prev + b == Rat(fan.d[i]) * a);
        sum += fan.d[i];
    }
    // Noether: a smooth complete toric surface with 18 rays has sum 3*18 - 12.
    CHECK(sum == 42);
    CHECK(fan.d[0] == 3);
    CHECK(fan.d[6] == 3);
    CHECK(fan.d[12] == 3);
}

TEST_CASE("moment polygon of the figure-eight vector")
{
    const RootSystem& rs = roots();
    const AVector a = figure_eight();
    const auto bbar = a.bbar();
    const auto corners = moment_polytope(bbar);
    const std::vector<Point> poly(corners.begin(), corners.end());
    CHECK(lattice_area(poly) == shoelace_twice(corners));

    for (int i = 0; i < kCycle; ++i) {
        const auto [dir, len] = primitive(corners[(i + 1) % kCycle] - corners[i]);
        CHECK(len == bbar[i]);
    }
    CHECK(circumference(rs, a, Direction::V3_12) == 2 * lattice_distance(corners, 3, 12));
    CHECK(circumference(rs, a, Direction::V8_16) == 2 * lattice_distance(corners, 8, 16));

    std::array<Rat, kCycle> open = bbar;
    open[0] += 1;
    CHECK_THROWS_AS(moment_polytope(open), Error);
}

TEST_CASE("circumference is the same for every null vector of a direction")
{
    const RootSystem& rs = roots();
    auto ev = [&](const std::vector<int>& comp, const AVector& a) {
        const IntVec n = null_vector(rs, comp);
        Rat s = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) s += Rat(n[i]) * a.a[comp[i]];
        return s;
    };
    std::mt19937_64 rng(12);
    for (int k = 0; k < 10; ++k) {
        const AVector a = sample_chamber_vector(rs, rng, SampleOptions{});
        CHECK(circumference(rs, a, Direction::V3_12) == ev(lists::affine_E8_1(), a));
        CHECK(circumference(rs, a, Direction::V3_12) == ev(lists::affine_E8_2(), a));
        CHECK(circumference(rs, a, Direction::V8_16) == ev(lists::affine_D10(), a));
        CHECK(circumference(rs, a, Direction::V2_4) == ev(lists::affine_D16(), a));
        CHECK(circumference(rs, a, Direction::Equator) == ev(lists::affine_A17(), a));
    }
    CHECK(parse_direction("8-16") == Direction::V8_16);
    CHECK_THROWS_AS(parse_direction("1-2"), Error);
}

TEST_CASE("figure-eight sphere")
{
    const RootSystem& rs = roots();
    const AVector a = figure_eight();
    for (Placement p : {Placement::Symmetric, Placement::VertexPreferred}) {
        const IASResult r = build_ias(rs, a, p);
        REQUIRE(r.sphere);
        CHECK(volume(*r.sphere) == 798);
        CHECK(volume(*r.sphere) == norm(rs, a));
        CHECK(r.sphere->locus.total_charge == 24);
        CHECK(r.sphere->locus.clusters.size() == 24);
        CHECK(r.sphere->equator.size() == kCycle);
    }
    CHECK(circumference(rs, a, Direction::V3_12) == 60);
    CHECK(circumference(rs, a, Direction::Equator) == 36);
    CHECK(circumference(rs, a, Direction::V8_16) == 36);
    CHECK(circumference(rs, a, Direction::V2_4) == 60);
}

TEST_CASE("worked example: one cluster of charge twenty")
{
    const RootSystem& rs = roots();
    const IASResult r = build_ias(rs, worked_example());
    REQUIRE(r.sphere);
    CHECK(volume(*r.sphere) == 38);
    const SingularLocus& loc = r.sphere->locus;
    CHECK(loc.total_charge == 24);
    REQUIRE(loc.clusters.size() == 5);
    CHECK(loc.clusters[0].charge == 20);
    CHECK(loc.clusters[0].shape.ascii() == "^A18-");
    CHECK(loc.clusters[0].data.name.find("I(17,1,1,1)") != std::string::npos);
    for (std::size_t i = 1; i < loc.clusters.size(); ++i) CHECK(loc.clusters[i].charge == 1);
}

TEST_CASE("volume equals square and placements agree")
{
    const RootSystem& rs = roots();
    std::mt19937_64 rng(31);
    for (int k = 0; k < 40; ++k) {
        const AVector a = sample_chamber_vector(rs, rng, SampleOptions{});
        const IASResult s = build_ias(rs, a, Placement::Symmetric);
        const IASResult v = build_ias(rs, a, Placement::VertexPreferred);
        REQUIRE(s.sphere);
        REQUIRE(v.sphere);
        CHECK(volume(*s.sphere) == norm(rs, a));
        CHECK(volume(*v.sphere) == norm(rs, a));
        CHECK(s.sphere->locus.total_charge == 24);
        REQUIRE(s.sphere->locus.clusters.size() == v.sphere->locus.clusters.size());
        for (std::size_t i = 0; i < s.sphere->locus.clusters.size(); ++i)
            CHECK(s.sphere->locus.clusters[i].shape == v.sphere->locus.clusters[i].shape);
    }
}

TEST_CASE("isotropic vectors give intervals")
{
    const RootSystem& rs = roots();
    std::map<int, Rat> p;
    for (int i = 0; i < kCycle; ++i) p[i] = 0;
    p[18] = 2;
    const IASResult r = build_ias(rs, complete_a(rs, p));
    CHECK_FALSE(r.sphere);
    REQUIRE(r.interval);
    CHECK(r.interval->halves == std::vector<std::string>{"~A17"});
    CHECK(r.interval->multiple == 2);
    CHECK(circumference(rs, complete_a(rs, p), Direction::Equator) == 0);
}

TEST_CASE("dual decompositions")
{
    const RootSystem& rs = roots();
    auto text = [&](Mask g) {
        std::string s;
        for (const Slice& sl : dual_decomposition(rs, g).slices) s += (s.empty() ? "" : " ") + sl.shape.ascii();
        return s;
    };
    CHECK(text(mask_of({18, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16})) == "^A18-");
    CHECK(dual_decomposition(rs, 0).slices.size() == kCycle);
    CHECK(dual_decomposition(rs, mask_of(lists::affine_A17())).type2);
}

TEST_CASE("JSON and SVG output")
{
    const RootSystem& rs = roots();
    const IASResult r = build_ias(rs, worked_example());
    const auto j = to_json(*r.sphere);
    CHECK(j["volume"] == 38);
    CHECK(j["total_charge"] == 24);
    CHECK(j["clusters"].size() == 5);
    const std::string svg = to_svg(*r.sphere);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg == to_svg(*build_ias(rs, worked_example()).sphere));
}
