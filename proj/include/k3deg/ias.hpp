// The integral-affine sphere B(a): toric fan, moment polygon, surgery cuts,
// doubling, and the singularities obtained when a-coordinates vanish.
#pragma once

#include "k3deg/chamber.hpp"
#include "k3deg/sl2.hpp"

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace k3deg {

struct Point {
    Rat x = 0, y = 0;
    bool operator==(const Point&) const = default;
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};
Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);
Point operator*(const Rat& k, const Point& p);
Rat cross(const Point& p, const Point& q);
Rat dot(const Point& p, const Point& q);

struct ToricFan18 {
    std::array<Point, kCycle> v;      // primitive rays, inward normals of the sides
    std::array<int, kCycle> d;        // v[i-1] + v[i+1] = d[i] v[i]
    Point edge(int i) const;          // side direction: v[i] turned clockwise
};
const ToricFan18& build_fan();

// Corners p_0..p_17 with side i running from p_i to p_{i+1}.
std::array<Point, kCycle> moment_polytope(const std::array<Rat, kCycle>& bbar);
// Normalized lattice area (unit triangle = 1) of a closed polygon.
Rat lattice_area(const std::vector<Point>& polygon);

enum class Placement { Symmetric, VertexPreferred };
const char* placement_name(Placement p);

struct Cut {
    int root = 18;     // 18, 19 or 20
    int side = 0;      // 0, 6 or 12
    Rat size = 0;
    Point base0, base1, apex;
    Point axis;        // monodromy-invariant direction, parallel to the side
};

struct SymingtonPolytope {
    std::array<Rat, kCycle> bbar{};
    std::array<Point, kCycle> corners{};
    std::array<Cut, 3> cuts{};
    Placement placement = Placement::Symmetric;
    // Boundary of P counterclockwise: sides with the cut bases replaced by
    // the two cut edges. Repeated points are removed.
    std::vector<Point> boundary() const;
};
SymingtonPolytope symington(const RootSystem& rs, const AVector& a, Placement placement);

struct Cluster {
    Mask vertices = 0;          // component of G(a); 0 for a lone I1
    ShapeLabel shape;           // oriented
    SingularityData data;
    int charge = 1;
    std::string position;       // "corner 5", "side 9", "interior 18"
    Point where;
};

struct SingularLocus {
    std::vector<Cluster> clusters;  // components of G(a) first, then lone I1 points
    int total_charge = 0;
    std::vector<std::string> exceptions;
};
SingularLocus singular_locus(const RootSystem& rs, const AVector& a,
                             Placement placement = Placement::Symmetric);

struct EquatorEdge {
    int side = 0;
    int multiplicity = 1;
    Rat length = 0;
};
std::vector<EquatorEdge> equator_divisor(const AVector& a);
// Self-intersection of the equator divisor recorded for the ramification curve.
constexpr int kEquatorSelfIntersection = 18;

struct IASphere {
    AVector a;
    SymingtonPolytope polytope;
    SingularLocus locus;
    std::vector<EquatorEdge> equator;
};
IASphere glue_double(const RootSystem& rs, const SymingtonPolytope& p, const AVector& a);

// Norm-zero inputs: the sphere collapses to a segment.
struct Interval {
    Mask diagram = 0;              // maximal parabolic zero set
    std::vector<std::string> halves;
    Int multiple = 1;              // a = multiple * primitive
};

struct IASResult {
    std::optional<IASphere> sphere;
    std::optional<Interval> interval;
};
IASResult build_ias(const RootSystem& rs, const AVector& a, Placement placement = Placement::Symmetric);

Rat volume(const IASphere& b);

enum class Direction { V3_12, V8_16, V2_4, Equator };
Direction parse_direction(const std::string& s);
Rat circumference(const RootSystem& rs, const AVector& a, Direction dir);

struct Slice {
    ShapeLabel shape;
    Mask component = 0;   // 0 for the A0 pieces between two consecutive free vertices
    int first = 0;        // first cycle vertex of the slice (left flank for A0 pieces)
};
struct DualDecomposition {
    bool type2 = false;
    std::vector<Slice> slices;      // cyclic order from vertex 0
    std::vector<std::string> marked_points;
};
DualDecomposition dual_decomposition(const RootSystem& rs, Mask g);

nlohmann::json to_json(const IASphere& b);
nlohmann::json to_json(const Interval& i);
std::string to_svg(const IASphere& b);

}  // namespace k3deg
