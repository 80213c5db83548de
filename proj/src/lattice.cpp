#include "k3deg/lattice.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

namespace k3deg {

Mask mask_of(const std::vector<int>& vertices)
{
    Mask m = 0;
    for (int v : vertices) m |= Mask{1} << v;
    return m;
}

std::vector<int> vertices_of(Mask m)
{
    std::vector<int> out;
    for (int i = 0; i < kRoots; ++i)
        if (m >> i & 1) out.push_back(i);
    return out;
}

Mask RootSystem::neighbours(int v) const
{
    Mask m = 0;
    for (int j = 0; j < kRoots; ++j)
        if (j != v && gram[v][j] != 0) m |= Mask{1} << j;
    return m;
}

namespace lists {
std::vector<int> affine_A17()
{
    std::vector<int> v(kCycle);
    std::iota(v.begin(), v.end(), 0);
    return v;
}
std::vector<int> affine_D10() { return {18, 17, 0, 1, 2, 3, 4, 5, 6, 7, 19}; }
std::vector<int> affine_E7() { return {9, 10, 11, 12, 13, 14, 15, 20}; }
std::vector<int> affine_E8_1() { return {13, 14, 15, 16, 17, 0, 1, 2, 18}; }
std::vector<int> affine_E8_2() { return {4, 5, 6, 7, 8, 9, 10, 11, 19}; }
std::vector<int> affine_A1_irr() { return {20, 23}; }
std::vector<int> affine_D16()
{
    std::vector<int> v{19};
    for (int i = 5; i < kCycle; ++i) v.push_back(i);
    v.push_back(0);
    v.push_back(1);
    v.push_back(18);
    return v;
}
std::vector<int> affine_A1_star() { return {3, 23}; }
}  // namespace lists

std::array<int, kRoots> rotation_perm()
{
    std::array<int, kRoots> p{};
    for (int i = 0; i < kCycle; ++i) p[i] = (i + 6) % kCycle;
    p[18] = 19, p[19] = 20, p[20] = 18;
    p[21] = 22, p[22] = 23, p[23] = 21;
    return p;
}

std::array<int, kRoots> reflection_perm()
{
    std::array<int, kRoots> p{};
    for (int i = 0; i < kCycle; ++i) p[i] = (kCycle - i) % kCycle;
    p[18] = 18, p[19] = 20, p[20] = 19;
    p[21] = 21, p[22] = 23, p[23] = 22;
    return p;
}

std::vector<int> apply_perm(const std::array<int, kRoots>& p, const std::vector<int>& v)
{
    std::vector<int> out;
    for (int x : v) out.push_back(p[x]);
    return out;
}

Mask apply_perm(const std::array<int, kRoots>& p, Mask m)
{
    Mask out = 0;
    for (int i = 0; i < kRoots; ++i)
        if (m >> i & 1) out |= Mask{1} << p[i];
    return out;
}

namespace {

IntVec null_vector_of(const Gram& g, const std::vector<int>& comp)
{
    RatMat sub(comp.size(), RatVec(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = g[comp[i]][comp[j]];
    auto ker = kernel(sub);
    if (ker.size() != 1)
        throw Error(ErrorKind::NotAffine, "kernel of restricted Gram matrix is not one-dimensional");
    IntVec n = primitive_integer(ker[0]);
    for (const auto& x : n)
        if (x <= 0) throw Error(ErrorKind::NotAffine, "null vector has a non-positive coefficient");
    return n;
}

RootCoeffs spread(const std::vector<int>& comp, const IntVec& n)
{
    RootCoeffs c{};
    for (std::size_t i = 0; i < comp.size(); ++i) c[comp[i]] = n[i];
    return c;
}

// The identities n(X) = n(Y) among affine null vectors, one rotation class each.
std::vector<std::pair<std::vector<int>, std::vector<int>>> base_identities()
{
    using namespace lists;
    return {{affine_D10(), affine_E7()},
            {affine_E8_1(), affine_E8_2()},
            {affine_E8_1(), affine_A1_irr()},
            {affine_D16(), affine_A1_star()}};
}

void set_pair(Gram& g, int i, int j, int v)
{
    g[i][j] = v;
    g[j][i] = v;
}

}  // namespace

RootSystem build_gram()
{
    Gram g{};
    for (int i = 0; i < kRoots; ++i) g[i][i] = -2;
    for (int i = 0; i < kCycle; ++i) set_pair(g, i, (i + 1) % kCycle, 1);
    set_pair(g, 18, 0, 1);
    set_pair(g, 19, 6, 1);
    set_pair(g, 20, 12, 1);
    for (auto [i, j] : {std::pair{18, 21}, {19, 22}, {20, 23}, {3, 23}, {9, 21}, {15, 22}})
        set_pair(g, i, j, 2);

    // 18, 19, 20 lie together in the affine D10 and D16 components, which are trees.
    std::vector<std::pair<int, int>> unknown;
    for (int i = 18; i < kRoots; ++i)
        for (int j = i + 1; j < kRoots; ++j) {
            if (g[i][j] != 0 || (i < 21 && j < 21)) continue;
            unknown.push_back({i, j});
        }
    auto unknown_index = [&](int i, int j) -> int {
        if (i > j) std::swap(i, j);
        for (std::size_t k = 0; k < unknown.size(); ++k)
            if (unknown[k] == std::pair{i, j}) return static_cast<int>(k);
        return -1;
    };

    RatMat rows;
    RatVec rhs;
    const auto rot = rotation_perm();
    for (const auto& [x, y] : base_identities()) {
        auto xs = x;
        auto ys = y;
        for (int r = 0; r < 3; ++r) {
            RootCoeffs d = spread(xs, null_vector_of(g, xs));
            RootCoeffs e = spread(ys, null_vector_of(g, ys));
            for (int j = 0; j < kRoots; ++j) {
                RatVec row(unknown.size(), Rat(0));
                Rat constant = 0;
                for (int i = 0; i < kRoots; ++i) {
                    Int c = d[i] - e[i];
                    if (c == 0) continue;
                    int k = i == j ? -1 : unknown_index(i, j);
                    if (k >= 0)
                        row[k] += Rat(c);
                    else
                        constant += Rat(c * g[i][j]);
                }
                rows.push_back(std::move(row));
                rhs.push_back(-constant);
            }
            xs = apply_perm(rot, xs);
            ys = apply_perm(rot, ys);
        }
    }
    RatVec sol;
    try {
        sol = solve_unique(rows, rhs);
    } catch (const Error& e) {
        throw Error(ErrorKind::Construction, std::string("interior Gram entries: ") + e.what());
    }
    for (std::size_t k = 0; k < unknown.size(); ++k) {
        if (denominator(sol[k]) != 1)
            throw Error(ErrorKind::Construction, "non-integral interior Gram entry");
        int v = static_cast<int>(numerator(sol[k]));
        if (v != 0 && v != 1 && v != 2 && v != 6)
            throw Error(ErrorKind::Construction, "interior Gram entry outside {0,1,2,6}");
        set_pair(g, unknown[k].first, unknown[k].second, v);
    }

    RootSystem rs{g};
    if (rank_and_discriminant(rs, (Mask{1} << kRoots) - 1).rank != 19)
        throw Error(ErrorKind::Construction, "Gram matrix does not have rank 19");
    if (!verify_relations(rs))
        throw Error(ErrorKind::Construction, "null-vector identities fail");
    return rs;
}

const RootSystem& roots()
{
    static const RootSystem rs = build_gram();
    return rs;
}

RankDisc rank_and_discriminant(const RootSystem& rs, Mask subset)
{
    auto v = vertices_of(subset);
    IntMat m(v.size(), IntVec(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = rs(v[i], v[j]);
    RankDisc out;
    out.invariant_factors = smith_invariants(std::move(m));
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

IntVec null_vector(const RootSystem& rs, const std::vector<int>& component)
{
    return null_vector_of(rs.gram, component);
}

RootCoeffs null_vector_coeffs(const RootSystem& rs, const std::vector<int>& component)
{
    return spread(component, null_vector(rs, component));
}

bool equal_in_N(const RootSystem& rs, const RootCoeffs& x, const RootCoeffs& y)
{
    for (int j = 0; j < kRoots; ++j) {
        Int s = 0;
        for (int i = 0; i < kRoots; ++i) s += (x[i] - y[i]) * rs(i, j);
        if (s != 0) return false;
    }
    return true;
}

bool verify_relations(const RootSystem& rs)
{
    const auto rot = rotation_perm();
    try {
        RootCoeffs syzygy{};
        for (const auto& [x, y] : base_identities()) {
            auto xs = x;
            auto ys = y;
            for (int r = 0; r < 3; ++r) {
                auto cx = null_vector_coeffs(rs, xs);
                auto cy = null_vector_coeffs(rs, ys);
                if (!equal_in_N(rs, cx, cy)) return false;
                if (x == lists::affine_E8_1() && y == lists::affine_E8_2())
                    for (int i = 0; i < kRoots; ++i) syzygy[i] += cx[i] - cy[i];
                xs = apply_perm(rot, xs);
                ys = apply_perm(rot, ys);
            }
        }
        for (const auto& c : syzygy)
            if (c != 0) return false;
    } catch (const Error&) {
        return false;
    }
    return true;
}

namespace {

// First 19 roots, in index order, with linearly independent Gram columns.
std::vector<int> greedy_basis(const RootSystem& rs)
{
    std::vector<int> chosen;
    RatMat cols;
    for (int j = 0; j < kRoots; ++j) {
        RatVec col(kRoots);
        for (int i = 0; i < kRoots; ++i) col[i] = rs(i, j);
        cols.push_back(col);
        if (rank(cols) > static_cast<int>(chosen.size()))
            chosen.push_back(j);
        else
            cols.pop_back();
    }
    return chosen;
}

// Per-Gram data reused by every a-vector computation.
struct GramCache {
    Gram gram;
    std::vector<IntVec> relations;
    std::vector<int> basis;
    RatMat basis_inverse;  // inverse of the Gram matrix restricted to `basis`
};

const GramCache& cache_for(const RootSystem& rs)
{
    static std::mutex mu;
    static std::vector<std::unique_ptr<GramCache>> entries;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& e : entries)
        if (e->gram == rs.gram) return *e;
    auto c = std::make_unique<GramCache>();
    c->gram = rs.gram;
    RatMat g(kRoots, RatVec(kRoots));
    for (int i = 0; i < kRoots; ++i)
        for (int j = 0; j < kRoots; ++j) g[i][j] = rs(i, j);
    for (const auto& v : kernel(g)) c->relations.push_back(primitive_integer(v));
    c->basis = greedy_basis(rs);
    const auto& B = c->basis;
    const std::size_t n = B.size();
    RatMat m(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rs(B[i], B[j]);
    c->basis_inverse.assign(n, RatVec(n));
    for (std::size_t k = 0; k < n; ++k) {
        RatVec e(n, Rat(0));
        e[k] = 1;
        const RatVec col = solve_unique(m, e);
        for (std::size_t i = 0; i < n; ++i) c->basis_inverse[i][k] = col[i];
    }
    entries.push_back(std::move(c));
    return *entries.back();
}

}  // namespace

std::vector<IntVec> relation_basis(const RootSystem& rs)
{
    return cache_for(rs).relations;
}

AVector AVector::from_ints(const std::vector<long long>& v)
{
    if (v.size() != kRoots) throw Error(ErrorKind::Usage, "an a-vector has 24 entries");
    AVector a;
    for (int i = 0; i < kRoots; ++i) a.a[i] = v[i];
    return a;
}

bool AVector::is_integral() const
{
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return denominator(x) == 1; });
}

std::array<Rat, kRoots> AVector::b() const
{
    std::array<Rat, kRoots> out;
    for (int i = 0; i < kRoots; ++i) out[i] = (i < kCycle && i % 2 == 0) ? a[i] : a[i] / 2;
    return out;
}

std::array<Rat, kCycle> AVector::bbar() const
{
    auto bb = b();
    std::array<Rat, kCycle> out;
    for (int i = 0; i < kCycle; ++i) out[i] = bb[i];
    out[0] += bb[18];
    out[6] += bb[19];
    out[12] += bb[20];
    return out;
}

Mask AVector::zero_set() const
{
    Mask m = 0;
    for (int i = 0; i < kRoots; ++i)
        if (a[i] == 0) m |= Mask{1} << i;
    return m;
}

AVector AVector::scaled(const Rat& k) const
{
    AVector out = *this;
    for (auto& x : out.a) x *= k;
    return out;
}

bool satisfies_relations(const RootSystem& rs, const AVector& a)
{
    for (const auto& rel : relation_basis(rs)) {
        Rat s = 0;
        for (int i = 0; i < kRoots; ++i) s += Rat(rel[i]) * a.a[i];
        if (s != 0) return false;
    }
    return true;
}

AVector complete_a(const RootSystem& rs, const std::map<int, Rat>& partial)
{
    const auto& rels = cache_for(rs).relations;
    std::vector<int> unknown;
    for (int i = 0; i < kRoots; ++i)
        if (!partial.count(i)) unknown.push_back(i);
    RatMat A(rels.size(), RatVec(unknown.size()));
    RatVec rhs(rels.size(), Rat(0));
    for (std::size_t r = 0; r < rels.size(); ++r) {
        for (std::size_t k = 0; k < unknown.size(); ++k) A[r][k] = Rat(rels[r][unknown[k]]);
        for (const auto& [i, v] : partial) rhs[r] -= Rat(rels[r][i]) * v;
    }
    AVector out;
    for (const auto& [i, v] : partial) {
        if (i < 0 || i >= kRoots) throw Error(ErrorKind::Usage, "vertex index out of range");
        out.a[i] = v;
    }
    if (unknown.empty()) {
        if (!satisfies_relations(rs, out))
            throw Error(ErrorKind::Inconsistent, "a-vector violates the lattice relations");
        return out;
    }
    RatVec x = solve_unique(A, rhs);
    for (std::size_t k = 0; k < unknown.size(); ++k) out.a[unknown[k]] = x[k];
    return out;
}

const std::vector<int>& basis_roots()
{
    static const std::vector<int> basis = greedy_basis(roots());
    return basis;
}

RatVec preimage(const RootSystem& rs, const AVector& a)
{
    const GramCache& cache = cache_for(rs);
    const auto& B = cache.basis;
    const RatMat& inv = cache.basis_inverse;
    RatVec x(kRoots, Rat(0));
    for (std::size_t j = 0; j < B.size(); ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < B.size(); ++i)
            if (inv[j][i] != 0) s += inv[j][i] * a.a[B[i]];
        x[B[j]] = s;
    }
    for (int i = 0; i < kRoots; ++i) {
        Rat s = 0;
        for (int j = 0; j < kRoots; ++j) s += x[j] * rs(i, j);
        if (s != a.a[i]) throw Error(ErrorKind::NotInImage, "a-vector is not in the image of N");
    }
    return x;
}

Rat norm(const RootSystem& rs, const AVector& a)
{
    RatVec x = preimage(rs, a);
    Rat s = 0;
    for (int i = 0; i < kRoots; ++i) s += x[i] * a.a[i];
    return s;
}

Rat pairing(const RootSystem& rs, const AVector& v, const AVector& w)
{
    RatVec x = preimage(rs, v);
    Rat s = 0;
    for (int i = 0; i < kRoots; ++i) s += x[i] * w.a[i];
    return s;
}

AVector a_of_coeffs(const RootSystem& rs, const RatVec& x)
{
    AVector out;
    for (int i = 0; i < kRoots; ++i) {
        Rat s = 0;
        for (int j = 0; j < kRoots; ++j) s += x[j] * rs(i, j);
        out.a[i] = s;
    }
    return out;
}

IntVec saturation_quotient(const RootSystem& rs, Mask g)
{
    auto v = vertices_of(g);
    IntMat m(kRoots, IntVec(v.size()));
    for (int i = 0; i < kRoots; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = rs(i, v[j]);
    IntVec out;
    for (auto& d : smith_invariants(std::move(m)))
        if (d > 1) out.push_back(d);
    return out;
}

DualLattice dual_lattice()
{
    DualLattice d;
    for (int i = 0; i < kRoots; ++i) {
        RatVec e(kRoots, Rat(0));
        e[i] = 1;
        d.generators.push_back(e);
    }
    RatVec half(kRoots, Rat(0));
    half[21] = Rat(1, 2);
    d.generators.push_back(half);
    return d;
}

Int DualLattice::index_over_N(const RootSystem& rs) const
{
    // Compare both lattices through the injective map v -> ((v, r_i))_i.
    auto image_factors = [&](const std::vector<RatVec>& gens, int scale) {
        IntMat m;
        for (const auto& g : gens) {
            IntVec row(kRoots);
            for (int i = 0; i < kRoots; ++i) {
                Rat s = 0;
                for (int j = 0; j < kRoots; ++j) s += g[j] * rs(i, j);
                s *= scale;
                row[i] = numerator(s);
            }
            m.push_back(row);
        }
        Int p = 1;
        for (auto& f : smith_invariants(m)) p *= f;
        return p;
    };
    std::vector<RatVec> n_gens(generators.begin(), generators.begin() + kRoots);
    Int pn = image_factors(n_gens, 2);
    Int pm = image_factors(generators, 2);
    return pn / pm;
}

nlohmann::json rat_json(const Rat& r)
{
    if (denominator(r) == 1 && abs(numerator(r)) < Int(1) << 62)
        return static_cast<long long>(numerator(r));
    return to_string(r);
}

nlohmann::json to_json(const RootSystem& rs)
{
    nlohmann::json m = nlohmann::json::array();
    for (const auto& row : rs.gram) m.push_back(row);
    return {{"size", kRoots}, {"gram", m}};
}

nlohmann::json to_json(const AVector& a)
{
    auto list = [](const auto& xs) {
        nlohmann::json j = nlohmann::json::array();
        for (const Rat& x : xs) j.push_back(rat_json(x));
        return j;
    };
    return {{"a", list(a.a)}, {"b", list(a.b())}, {"bbar", list(a.bbar())}};
}

}  // namespace k3deg
