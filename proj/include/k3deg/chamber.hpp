// The fundamental chamber of W(N), reduction into it, and cone data.
#pragma once

#include "k3deg/diagrams.hpp"

namespace k3deg {

// Interior reference vector of the chamber.
AVector rho(const RootSystem& rs);

bool in_fundamental(const AVector& a);
AVector reflect(const RootSystem& rs, const AVector& a, int j);

struct Reduction {
    AVector result;
    std::vector<int> word;          // reflections in the order applied
    std::vector<Rat> certificate;   // (rho, v) before each step and at the end
};
Reduction reduce_to_fundamental(const RootSystem& rs, const AVector& v);

struct ConeDescriptor {
    Mask zero_set = 0;
    DiagramClass cls = DiagramClass::Elliptic;
    Mask relevant_zero_set = 0;
    int type = 3;      // 3 for elliptic faces, 2 for isotropic rays
    int tor_dim = 0;
    int slc_dim = 0;
};
ConeDescriptor cone_of(const RootSystem& rs, const AVector& a);

struct SemifanCone {
    Mask g = 0;
    Mask g_rel = 0;
    bool operator==(const SemifanCone& o) const { return g_rel == o.g_rel; }
};
SemifanCone semifan_cone(const RootSystem& rs, const AVector& a);

struct DivisorCount {
    int type2 = 0;
    int type3 = 0;
    std::vector<Mask> type2_reps;
    std::vector<Mask> type3_reps;
};
DivisorCount count_boundary_divisors(const RootSystem& rs, const EnumerationResult& e);

}  // namespace k3deg

#include <optional>
#include <random>

namespace k3deg {

struct SampleOptions {
    int max_entry = 20;
    bool parity = true;       // a_i even for odd i and for i >= 18
    bool positive = false;    // all 24 entries nonzero
    bool bound_all = false;   // the completed entries must also be <= max_entry
};
// One attempt: draw a_0..a_18, complete, and keep the result if it is a
// chamber vector of positive square meeting the options.
std::optional<AVector> try_sample_chamber_vector(const RootSystem& rs, std::mt19937_64& rng,
                                                 const SampleOptions& opt);
AVector sample_chamber_vector(const RootSystem& rs, std::mt19937_64& rng, const SampleOptions& opt);

}  // namespace k3deg
