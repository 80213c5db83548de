#include "k3deg/chamber.hpp"

#include <algorithm>
#include <set>

namespace k3deg {

AVector rho(const RootSystem& rs)
{
    // The constant vector 2 is not in the image of N; the three interior
    // coordinates 21..23 are forced by the relations.
    std::map<int, Rat> partial;
    for (int i = 0; i < 21; ++i) partial[i] = 2;
    AVector r = complete_a(rs, partial);
    for (int k = 1;; ++k) {
        AVector s = r.scaled(k);
        if (!s.is_integral()) continue;
        auto even = [&](int i) { return numerator(s.a[i]) % 2 == 0; };
        if (even(21) && even(22) && even(23)) return s;
    }
}

bool in_fundamental(const AVector& a)
{
    return std::all_of(a.a.begin(), a.a.end(), [](const Rat& x) { return x >= 0; });
}

AVector reflect(const RootSystem& rs, const AVector& a, int j)
{
    AVector out = a;
    const Rat aj = a.a[j];
    for (int k = 0; k < kRoots; ++k) out.a[k] += aj * rs(j, k);
    return out;
}

Reduction reduce_to_fundamental(const RootSystem& rs, const AVector& v)
{
    static const AVector r = rho(rs);
    Reduction red;
    red.result = v;
    const bool zero = v.zero_set() == (Mask{1} << kRoots) - 1;
    if (zero) {
        red.certificate.push_back(0);
        return red;
    }
    const Rat n = norm(rs, v);
    Rat height = pairing(rs, r, v);
    if (n < 0 || height <= 0)
        throw Error(ErrorKind::NotInCone, "vector is outside the closed positive cone");
    red.certificate.push_back(height);
    const long kMaxSteps = 10'000'000;
    for (long step = 0; step < kMaxSteps; ++step) {
        int j = -1;
        for (int i = 0; i < kRoots; ++i)
            if (red.result.a[i] < 0 && (j < 0 || red.result.a[i] < red.result.a[j])) j = i;
        if (j < 0) return red;
        // (rho, s_j v) = (rho, v) + a_j (rho, r_j) with (rho, r_j) = rho_j > 0.
        height += red.result.a[j] * r.a[j];
        red.result = reflect(rs, red.result, j);
        red.word.push_back(j);
        red.certificate.push_back(height);
    }
    throw Error(ErrorKind::NotInCone, "reduction did not terminate");
}

ConeDescriptor cone_of(const RootSystem& rs, const AVector& a)
{
    if (!in_fundamental(a)) throw Error(ErrorKind::NotInCone, "a-vector is not in the chamber");
    ConeDescriptor c;
    c.zero_set = a.zero_set();
    if (c.zero_set == (Mask{1} << kRoots) - 1)
        throw Error(ErrorKind::Degenerate, "zero vector has no cone");
    c.cls = definiteness(rs, c.zero_set);
    c.relevant_zero_set = relevant_content(rs, c.zero_set);
    const Rat n = norm(rs, a);
    if (n > 0) {
        if (c.cls != DiagramClass::Elliptic)
            throw Error(ErrorKind::Inconsistent, "positive norm but the zero set is not elliptic");
        c.type = 3;
        c.tor_dim = popcount(c.zero_set);
        c.slc_dim = popcount(c.relevant_zero_set);
    } else {
        if (c.cls != DiagramClass::Parabolic || rank_and_discriminant(rs, c.zero_set).rank != 17)
            throw Error(ErrorKind::Inconsistent, "isotropic vector without a maximal parabolic zero set");
        c.type = 2;
        c.tor_dim = 17;
        c.slc_dim = rank_and_discriminant(rs, c.relevant_zero_set).rank;
    }
    return c;
}

SemifanCone semifan_cone(const RootSystem& rs, const AVector& a)
{
    SemifanCone s;
    s.g = a.zero_set();
    s.g_rel = relevant_content(rs, s.g);
    return s;
}

DivisorCount count_boundary_divisors(const RootSystem& rs, const EnumerationResult& e)
{
    DivisorCount out;
    if (e.max_rank < 18) throw Error(ErrorKind::Usage, "enumeration up to rank 18 is required");
    std::set<Mask> seen;
    for (Mask g : e.representatives[18]) {
        if (relevant_content(rs, g) != g) continue;
        Mask key = (g >> kCycle) == 0 ? canonical_d9(g) : g;
        if (seen.insert(key).second) out.type3_reps.push_back(g);
    }
    for (Mask m : survey_parabolics(rs).maximal_mod_s3)
        if (rank_and_discriminant(rs, relevant_content(rs, m)).rank == 17) out.type2_reps.push_back(m);
    out.type2 = static_cast<int>(out.type2_reps.size());
    out.type3 = static_cast<int>(out.type3_reps.size());
    return out;
}

std::optional<AVector> try_sample_chamber_vector(const RootSystem& rs, std::mt19937_64& rng,
                                                 const SampleOptions& opt)
{
    auto even = [&](int i) { return opt.parity && (i % 2 == 1 || i >= kCycle); };
    std::map<int, Rat> partial;
    for (int i = 0; i <= 18; ++i) {
        const int lo = opt.positive ? (even(i) ? 2 : 1) : 0;
        int v = std::uniform_int_distribution<int>(lo, opt.max_entry)(rng);
        if (even(i)) v &= ~1;
        partial[i] = std::max(v, lo);
    }
    AVector a = complete_a(rs, partial);
    if (!a.is_integral()) return std::nullopt;
    for (int i = 0; i < kRoots; ++i) {
        const Rat& x = a.a[i];
        if (x < 0 || (opt.positive && x == 0)) return std::nullopt;
        if (opt.bound_all && x > opt.max_entry) return std::nullopt;
        if (even(i) && numerator(x) % 2 != 0) return std::nullopt;
    }
    if (norm(rs, a) <= 0) return std::nullopt;
    if (definiteness(rs, a.zero_set()) != DiagramClass::Elliptic) return std::nullopt;
    return a;
}

AVector sample_chamber_vector(const RootSystem& rs, std::mt19937_64& rng, const SampleOptions& opt)
{
    for (int attempt = 0; attempt < 1'000'000; ++attempt)
        if (auto a = try_sample_chamber_vector(rs, rng, opt)) return *a;
    throw Error(ErrorKind::Degenerate, "no chamber vector found for the sampling options");
}

}  // namespace k3deg
