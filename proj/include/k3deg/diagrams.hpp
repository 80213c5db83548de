// Subdiagrams of the 24-vertex Coxeter diagram: classification, shapes,
// symmetries and enumeration.
#pragma once

#include "k3deg/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace k3deg {

enum class DiagramClass { Elliptic, Parabolic, Indefinite };
const char* class_name(DiagramClass c);

struct Subdiagram {
    Mask vertices = 0;
    DiagramClass cls = DiagramClass::Elliptic;
    std::vector<Mask> components;
    int rank = 0;
};

std::vector<Mask> components(const RootSystem& rs, Mask m);
// Exact test on -Gram restricted to m: positive definite / semidefinite.
DiagramClass definiteness(const RootSystem& rs, Mask m);
Subdiagram classify(const RootSystem& rs, Mask m);

enum class Deco { None, Minus, Prime };

enum class Kind {
    A,          // chain, possibly with leaves at its ends (decorations)
    D,
    E,
    AffA,       // the full 18-cycle
    AffD,
    AffE,
    AffA1Star,  // [3,23] and its images
    IrrA1,      // a single vertex of {18,19,20}
    IrrDownA1,  // a single vertex of {21,22,23}
    IrrAffA1,   // [20,23] and its images
};

struct ShapeLabel {
    Kind kind = Kind::A;
    int n = 0;
    // For A: decorations at the counterclockwise-earlier and later ends.
    // For D: `right` decorates the long arm.
    Deco left = Deco::None;
    Deco right = Deco::None;

    bool irrelevant() const;
    bool affine() const;
    // Mirror-normalized form, matching the rows of the classification table.
    ShapeLabel normalized() const;
    std::string ascii() const;
    // Undecorated root-system type such as "A1", "D10" or "~E8".
    std::string dynkin_type() const;
    bool operator==(const ShapeLabel&) const = default;
};

// Oriented shape, as read counterclockwise along the cycle.
ShapeLabel oriented_shape(const RootSystem& rs, Mask component);
// Symmetry-invariant shape.
ShapeLabel shape(const RootSystem& rs, Mask component);
ShapeLabel parse_shape(const std::string& ascii);

Mask relevant_content(const RootSystem& rs, Mask g);

using Perm = std::array<int, kRoots>;

struct SymmetryAction {
    std::vector<Perm> s3;  // every Gram-preserving vertex permutation
    std::vector<Perm> d9;  // dihedral symmetries of the cycle preserving parity
};
SymmetryAction automorphism_group(const RootSystem& rs);

// Fast mask permutation with per-byte tables.
class MaskPermuter {
public:
    explicit MaskPermuter(const Perm& p);
    Mask operator()(Mask m) const
    {
        return t_[0][m & 0xff] | t_[1][(m >> 8) & 0xff] | t_[2][(m >> 16) & 0xff];
    }

private:
    std::array<std::array<Mask, 256>, 3> t_{};
};

Mask canonical_s3(Mask m);
Mask canonical_d9(Mask m);
std::vector<Mask> s3_orbit(Mask m);

struct EnumerationResult {
    int max_rank = 0;
    // Indexed by rank; entry 0 is the empty diagram.
    std::vector<long long> total;
    std::vector<long long> orbits;
    std::vector<std::vector<Mask>> representatives;
};

// Elliptic subdiagrams of rank <= max_rank via depth-first search with an
// incremental fraction-free elimination; `threads` workers split the first
// vertex.
EnumerationResult enumerate_elliptic(const RootSystem& rs, int max_rank, int threads = 1);
const EnumerationResult& full_enumeration();

// Connected elliptic and connected affine subdiagrams.
struct ConnectedCatalog {
    std::vector<Mask> elliptic;
    std::vector<Mask> affine;
};
ConnectedCatalog connected_catalog(const RootSystem& rs);

struct ParabolicSurvey {
    std::vector<Mask> maximal;          // all of them
    std::vector<Mask> maximal_mod_s3;   // canonical representatives
    long long parabolic_count = 0;
    bool all_contained = false;          // every parabolic lies in a maximal one
};
ParabolicSurvey survey_parabolics(const RootSystem& rs);

// Vertex lists of the four maximal parabolic classes.
std::vector<std::vector<std::vector<int>>> maximal_parabolic_lists();

}  // namespace k3deg
