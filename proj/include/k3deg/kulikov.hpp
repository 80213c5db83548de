// Combinatorial Kulikov models: unit triangulations of B(a), their
// statistics, stable-model labels and type II interval models.
#pragma once

#include "k3deg/ias.hpp"

namespace k3deg {

bool parity_check(const AVector& a);

struct LatticePoint {
    long long x = 0, y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

struct Triangulation {
    // Triangulation of the polygon P on all of its lattice points.
    std::vector<LatticePoint> points;
    std::vector<std::array<int, 3>> triangles;  // counterclockwise
    std::vector<bool> on_equator;               // boundary point lying on a side of P-bar
    // Sphere structure: vertex class of (copy, point), copy 0 = north.
    std::vector<std::array<int, 2>> vertex_class;
    std::vector<int> charge;                    // per vertex class
    std::vector<bool> class_on_equator;
    int v = 0, e = 0, f = 0;
    int e_E = 0, v_E = 0;
    int q_E = 0, q_N = 0;
};

Triangulation triangulate(const RootSystem& rs, const AVector& a);
int dsemistable_dimension(const Triangulation& t);
std::pair<int, int> eigenranks(const Triangulation& t);

struct DegenerationLabel {
    bool type2 = false;
    std::vector<Slice> slices;
    std::string text;        // as read from vertex 0
    std::string canonical;   // least text over the symmetry group
    std::string symmetry;    // "S3" or "D9"
};
DegenerationLabel stable_model_label(const RootSystem& rs, const AVector& a);
DegenerationLabel label_of_diagram(const RootSystem& rs, Mask g);

enum class Fate { Big, NefNotBig, Trivial };
const char* fate_name(Fate f);
struct ComponentFate {
    int vertex_class = 0;
    Fate fate = Fate::Trivial;
    std::string shape;   // for equator vertices carrying a singularity
    int charge = 0;
};
std::vector<ComponentFate> contraction_plan(const RootSystem& rs, const Triangulation& t, const AVector& a);

struct TypeIIModel {
    std::vector<std::string> halves;
    Int m = 1;
    struct Stretch {
        Int from, to;
        std::string description;
    };
    std::vector<Stretch> components;  // along the interval [0, m]
};
TypeIIModel typeII_model(const RootSystem& rs, const AVector& a);

nlohmann::json to_json(const Triangulation& t);
nlohmann::json to_json(const DegenerationLabel& l);
nlohmann::json to_json(const TypeIIModel& m);

}  // namespace k3deg
