#include "k3deg/kulikov.hpp"

#include "doctest.h"

#include <random>
#include <set>

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

long long twice_area(const Triangulation& t, const std::array<int, 3>& tri)
{
    const LatticePoint& a = t.points[tri[0]];
    const LatticePoint& b = t.points[tri[1]];
    const LatticePoint& c = t.points[tri[2]];
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

TEST_CASE("parity condition")
{
    CHECK(parity_check(figure_eight()));
    CHECK(parity_check(worked_example()));
    AVector odd = figure_eight();
    odd.a[1] = 3;
    CHECK_FALSE(parity_check(odd));
    try {
        triangulate(roots(), odd);
        FAIL("expected a parity violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParityViolation);
    }
}

TEST_CASE("figure-eight triangulation")
{
    const RootSystem& rs = roots();
    const Triangulation t = triangulate(rs, figure_eight());
    for (const auto& tri : t.triangles) CHECK(twice_area(t, tri) == 1);
    // Pick: a unit triangulation of a lattice polygon uses 2A triangles.
    CHECK(static_cast<long long>(t.triangles.size()) * 2 == 798);
    CHECK(t.v == 401);
    CHECK(t.e == 1197);
    CHECK(t.f == 798);
    CHECK(t.e_E == t.v_E);
    CHECK(t.q_E == 18);
    CHECK(t.q_N == 3);
    CHECK(t.v - t.e + t.f == 2);
    CHECK(dsemistable_dimension(t) == 19);
    CHECK(eigenranks(t) == std::pair{1, 18});
}

TEST_CASE("worked example triangulation and contraction")
{
    const RootSystem& rs = roots();
    const AVector a = worked_example();
    const Triangulation t = triangulate(rs, a);
    CHECK(t.f == 38);
    CHECK(t.v == 21);
    CHECK(t.e == 57);
    CHECK(t.q_E == 20);
    CHECK(t.q_N == 2);
    int charge = 0;
    for (int c : t.charge) charge += c;
    CHECK(charge == 24);

    int big = 0, nef = 0;
    for (const ComponentFate& f : contraction_plan(rs, t, a)) {
        if (f.fate == Fate::Big) {
            ++big;
            CHECK(f.shape == "^A18-");
            CHECK(f.charge == 20);
        }
        nef += f.fate == Fate::NefNotBig;
    }
    CHECK(big == 1);
    CHECK(nef == 2);
}

TEST_CASE("random triangulations satisfy the sphere identities")
{
    const RootSystem& rs = roots();
    std::mt19937_64 rng(101);
    SampleOptions opt;
    opt.positive = true;
    for (int k = 0; k < 8; ++k) {
        const AVector a = sample_chamber_vector(rs, rng, opt);
        const Triangulation t = triangulate(rs, a);
        CHECK(t.f == norm(rs, a));
        CHECK(t.e - 3 * t.v == -6);
        CHECK(t.q_E + 2 * t.q_N == 24);
        CHECK(eigenranks(t) == std::pair{1, 18});
        std::set<LatticePoint> distinct(t.points.begin(), t.points.end());
        CHECK(distinct.size() == t.points.size());
    }
}

TEST_CASE("labels")
{
    const RootSystem& rs = roots();
    const DegenerationLabel w = stable_model_label(rs, worked_example());
    CHECK(w.text == "^A18-");
    CHECK(w.canonical == "^A18-");
    CHECK(w.symmetry == "S3");
    CHECK_FALSE(w.type2);

    const DegenerationLabel empty = label_of_diagram(rs, 0);
    CHECK(empty.symmetry == "D9");
    CHECK(empty.slices.size() == kCycle);

    // The label is a symmetry invariant.
    const Mask g = mask_of({1, 2, 3, 19});
    const MaskPermuter rot(rotation_perm());
    CHECK(label_of_diagram(rs, g).canonical == label_of_diagram(rs, rot(g)).canonical);

    const auto j = to_json(w);
    CHECK(j["label"] == "^A18-");
}

TEST_CASE("type II models")
{
    const RootSystem& rs = roots();
    std::map<int, Rat> p;
    for (int i = 0; i < kCycle; ++i) p[i] = 0;
    p[18] = 1;
    try {
        typeII_model(rs, complete_a(rs, p));
        FAIL("expected an odd multiple error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OddMultiple);
    }
    p[18] = 2;
    const TypeIIModel m = typeII_model(rs, complete_a(rs, p));
    CHECK(m.m == 2);
    CHECK(m.halves == std::vector<std::string>{"~A17"});
    REQUIRE(!m.components.empty());
    CHECK(m.components.front().from == 0);
    CHECK(m.components.back().to == 2);
}
