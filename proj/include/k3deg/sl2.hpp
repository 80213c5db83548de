// SL2(Z) shears, monodromy of integral-affine singularities and conjugacy
// classes.
#pragma once

#include "k3deg/diagrams.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3deg {

struct SL2 {
    Int a = 1, b = 0, c = 0, d = 1;

    static SL2 identity() { return {}; }
    static SL2 L() { return {1, 1, 0, 1}; }
    static SL2 R() { return {1, 0, 1, 1}; }

    SL2 operator*(const SL2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    SL2 operator-() const { return {-a, -b, -c, -d}; }
    SL2 inverse() const { return {d, -b, -c, a}; }
    SL2 pow(long long n) const;
    Int trace() const { return a + d; }
    Int det() const { return a * d - b * c; }
    bool operator==(const SL2&) const = default;
    std::string str() const;
};

namespace kodaira {
SL2 II();
SL2 III();
SL2 IV();
SL2 II_star();
SL2 III_star();
SL2 IV_star();
}  // namespace kodaira

using Vec2 = std::pair<Int, Int>;

// Row-vector right action: v * M(v) = v.
SL2 shear_matrix(const Vec2& v);
Vec2 act(const Vec2& v, const SL2& m);

struct SingularityData {
    std::vector<std::pair<Vec2, int>> rays;  // (primitive direction, multiplicity)
    std::string name;

    // I(n1, ..., nk) on u, v, w = -u-v for k = 3 and u, v, -u, -v for k = 4.
    static SingularityData I(const std::vector<int>& n);
};

SL2 monodromy(const SingularityData& s);
int charge(const SingularityData& s);

// Canonical conjugacy-class tag, e.g. "Id", "Kodaira:II*", "L^3", "-R^2",
// "word:RRLRL", "-word:RL".
std::string conjugacy_class(const SL2& m);

struct DivisorRay {
    Vec2 direction;   // primitive
    int multiplicity;  // 1 or 2
};

struct TableProfile {
    SingularityData singularity;
    std::vector<DivisorRay> divisor;
};
TableProfile table_profile(const ShapeLabel& oriented);

// The monodromy family listed for a shape in the singularity table, as a
// presentation I(...).
SingularityData table2_presentation(const ShapeLabel& shape);

}  // namespace k3deg
