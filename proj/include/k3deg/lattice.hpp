// The hyperbolic lattice N spanned by 24 roots, its dual, and a-coordinates.
#pragma once

#include "k3deg/numeric.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace k3deg {

constexpr int kRoots = 24;
constexpr int kCycle = 18;

using Mask = std::uint32_t;
constexpr Mask kCycleMask = (Mask{1} << kCycle) - 1;
using Gram = std::array<std::array<int, kRoots>, kRoots>;

Mask mask_of(const std::vector<int>& vertices);
std::vector<int> vertices_of(Mask m);
inline int popcount(Mask m) { return __builtin_popcount(m); }

struct RootSystem {
    Gram gram{};

    int operator()(int i, int j) const { return gram[i][j]; }
    // Vertices joined to v by any nonzero pairing.
    Mask neighbours(int v) const;
};

// Solves the interior entries from the null-vector identities, then validates.
RootSystem build_gram();

// The shared immutable root system.
const RootSystem& roots();

struct RankDisc {
    int rank = 0;
    IntVec invariant_factors;
};
RankDisc rank_and_discriminant(const RootSystem& rs, Mask subset);

// Primitive positive null vector of a connected affine subdiagram, listed in
// the order of `component`.
IntVec null_vector(const RootSystem& rs, const std::vector<int>& component);

// A coefficient vector over all 24 roots.
using RootCoeffs = std::array<Int, kRoots>;
RootCoeffs null_vector_coeffs(const RootSystem& rs, const std::vector<int>& component);

// True iff the coefficient vectors agree as elements of N.
bool equal_in_N(const RootSystem& rs, const RootCoeffs& x, const RootCoeffs& y);

bool verify_relations(const RootSystem& rs);

// Integer basis of the kernel of the Gram matrix (the relations among roots).
std::vector<IntVec> relation_basis(const RootSystem& rs);

struct AVector {
    std::array<Rat, kRoots> a{};

    static AVector from_ints(const std::vector<long long>& v);
    bool is_integral() const;
    std::array<Rat, kRoots> b() const;
    std::array<Rat, kCycle> bbar() const;
    Mask zero_set() const;
    AVector scaled(const Rat& k) const;
};

bool satisfies_relations(const RootSystem& rs, const AVector& a);
AVector complete_a(const RootSystem& rs, const std::map<int, Rat>& partial);

// Coefficients x with Gram x = a, supported on the basis roots.
RatVec preimage(const RootSystem& rs, const AVector& a);
Rat norm(const RootSystem& rs, const AVector& a);
// (v, w) for the preimages of two a-vectors.
Rat pairing(const RootSystem& rs, const AVector& v, const AVector& w);
AVector a_of_coeffs(const RootSystem& rs, const RatVec& x);

nlohmann::json to_json(const RootSystem& rs);
// The 24 entries with the derived b and b-bar; rationals as strings when
// not integral.
nlohmann::json to_json(const AVector& a);
nlohmann::json rat_json(const Rat& r);

// 19 independent roots used as the internal basis of N_Q.
const std::vector<int>& basis_roots();

// Invariant factors (> 1) of M_G / R_G.
IntVec saturation_quotient(const RootSystem& rs, Mask g);

struct DualLattice {
    // Generators of M = N + (1/2) r21 in root coordinates.
    std::vector<RatVec> generators;
    Int index_over_N(const RootSystem& rs) const;
};
DualLattice dual_lattice();

// Images of the maximal-parabolic components under the diagram symmetries.
namespace lists {
std::vector<int> affine_A17();
std::vector<int> affine_D10();
std::vector<int> affine_E7();
std::vector<int> affine_E8_1();
std::vector<int> affine_E8_2();
std::vector<int> affine_A1_irr();
std::vector<int> affine_D16();
std::vector<int> affine_A1_star();
}  // namespace lists

// The rotation i -> i+6 of the diagram as a vertex permutation.
std::array<int, kRoots> rotation_perm();
// The reflection i -> -i fixing 0, 18, 21.
std::array<int, kRoots> reflection_perm();
std::vector<int> apply_perm(const std::array<int, kRoots>& p, const std::vector<int>& v);
Mask apply_perm(const std::array<int, kRoots>& p, Mask m);

}  // namespace k3deg
