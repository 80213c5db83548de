#include "k3deg/sl2.hpp"

#include "doctest.h"

#include <random>

using namespace k3deg;

TEST_CASE("Kodaira matrices have the expected orders")
{
    const SL2 id = SL2::identity();
    CHECK(kodaira::II().pow(6) == id);
    CHECK(kodaira::II().pow(3) == -id);
    CHECK(kodaira::III().pow(4) == id);
    CHECK(kodaira::IV().pow(3) == id);
    CHECK(kodaira::II() * kodaira::II_star() == id);
    CHECK(kodaira::III() * kodaira::III_star() == id);
    CHECK(kodaira::IV() * kodaira::IV_star() == id);
    CHECK(kodaira::II().trace() == 1);
    CHECK(kodaira::III().trace() == 0);
    CHECK(kodaira::IV().trace() == -1);
}

TEST_CASE("shears fix their direction")
{
    for (const Vec2& v : {Vec2{1, 0}, Vec2{0, 1}, Vec2{2, 3}, Vec2{-5, 7}}) {
        const SL2 m = shear_matrix(v);
        CHECK(m.det() == 1);
        CHECK(m.trace() == 2);
        CHECK(act(v, m) == v);
    }
    CHECK_THROWS_AS(shear_matrix({2, 4}), Error);
}

TEST_CASE("traces of the singularity families")
{
    auto tr = [](std::vector<int> n) { return monodromy(SingularityData::I(n)).trace(); };
    for (int n = 3; n <= 12; ++n) {
        CHECK(tr({n + 1}) == 2);
        CHECK(tr({2, 2, n - 2}) == -2);
        CHECK(tr({2, 3, n - 3}) == n - 7);
        CHECK(tr({n + 1, 1}) == 1 - n);
        CHECK(tr({n, n, 2}) == (n - 2) * (n - 2) - 2);
    }
    CHECK(tr({1, 1, 1}) == 0);
    CHECK(tr({2, 1, 1}) == -1);
    CHECK(monodromy(SingularityData::I({1, 1})) == kodaira::II());
    CHECK(charge(SingularityData::I({2, 3, 5})) == 10);
}

TEST_CASE("conjugacy class names")
{
    auto cls = [](std::vector<int> n) { return conjugacy_class(monodromy(SingularityData::I(n))); };
    CHECK(conjugacy_class(SL2::identity()) == "Id");
    CHECK(conjugacy_class(-SL2::identity()) == "-Id");
    CHECK(cls({1, 1}) == "Kodaira:II");
    CHECK(cls({2, 3, 5}) == "Kodaira:II*");
    CHECK(cls({2, 3, 4}) == "Kodaira:III*");
    CHECK(cls({2, 3, 3}) == "Kodaira:IV*");
    CHECK(cls({5}) == "L^5");
    CHECK(cls({2, 2, 6}) == "-L^4");
    CHECK(conjugacy_class(SL2::R() * SL2::L()) == conjugacy_class(SL2::L() * SL2::R()));
}

TEST_CASE("conjugacy classes are conjugation invariant")
{
    std::mt19937 g(3);
    const SL2 gens[4] = {SL2::L(), SL2::R(), SL2::L().inverse(), SL2::R().inverse()};
    for (int it = 0; it < 500; ++it) {
        SL2 m;
        for (int i = 0; i < 1 + static_cast<int>(g() % 8); ++i) m = m * gens[g() % 4];
        SL2 c;
        for (int i = 0; i < 1 + static_cast<int>(g() % 10); ++i) c = c * gens[g() % 4];
        CHECK(conjugacy_class(m) == conjugacy_class(c * m * c.inverse()));
    }
}

TEST_CASE("equivalent presentations")
{
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q)
            CHECK(conjugacy_class(monodromy(SingularityData::I({2, p, q}))) ==
                  conjugacy_class(monodromy(SingularityData::I({p, 1, q, 1}))));
}

TEST_CASE("table profiles agree with the listed presentations")
{
    const RootSystem& rs = roots();
    for (Mask m : connected_catalog(rs).elliptic) {
        const ShapeLabel s = oriented_shape(rs, m);
        const TableProfile p = table_profile(s);
        const SingularityData q = table2_presentation(s.normalized());
        CHECK(conjugacy_class(monodromy(p.singularity)) == conjugacy_class(monodromy(q)));
        CHECK(charge(p.singularity) == charge(q));
    }
}
