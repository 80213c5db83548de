#include "k3deg/diagrams.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <unordered_set>

namespace k3deg {

const char* class_name(DiagramClass c)
{
    switch (c) {
    case DiagramClass::Elliptic: return "elliptic";
    case DiagramClass::Parabolic: return "parabolic";
    case DiagramClass::Indefinite: return "indefinite";
    }
    return "?";
}

namespace {


Mask flood(const RootSystem& rs, Mask within, Mask seed)
{
    Mask cur = seed & within;
    while (true) {
        Mask next = cur;
        for (int v : vertices_of(cur)) next |= rs.neighbours(v) & within;
        if (next == cur) return cur;
        cur = next;
    }
}

}  // namespace

std::vector<Mask> components(const RootSystem& rs, Mask m)
{
    std::vector<Mask> out;
    Mask rest = m;
    while (rest) {
        Mask c = flood(rs, m, rest & (~rest + 1));
        out.push_back(c);
        rest &= ~c;
    }
    return out;
}

DiagramClass definiteness(const RootSystem& rs, Mask m)
{
    auto v = vertices_of(m);
    const std::size_t n = v.size();
    RatMat a(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = -rs(v[i], v[j]);
    std::vector<bool> alive(n, true);
    bool singular = false;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && a[i][i] > 0) {
                p = i;
                break;
            }
        if (p == n) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!alive[i]) continue;
                if (a[i][i] < 0) return DiagramClass::Indefinite;
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[j] && a[i][j] != 0) return DiagramClass::Indefinite;
            }
            singular = true;
            break;
        }
        alive[p] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || a[i][p] == 0) continue;
            const Rat f = a[i][p] / a[p][p];
            for (std::size_t j = 0; j < n; ++j)
                if (alive[j]) a[i][j] -= f * a[p][j];
        }
    }
    return singular ? DiagramClass::Parabolic : DiagramClass::Elliptic;
}

Subdiagram classify(const RootSystem& rs, Mask m)
{
    Subdiagram s;
    s.vertices = m;
    s.cls = definiteness(rs, m);
    s.components = components(rs, m);
    s.rank = rank_and_discriminant(rs, m).rank;
    return s;
}

bool ShapeLabel::irrelevant() const
{
    return kind == Kind::IrrA1 || kind == Kind::IrrDownA1 || kind == Kind::IrrAffA1;
}

bool ShapeLabel::affine() const
{
    return kind == Kind::AffA || kind == Kind::AffD || kind == Kind::AffE ||
           kind == Kind::AffA1Star || kind == Kind::IrrAffA1;
}

ShapeLabel ShapeLabel::normalized() const
{
    ShapeLabel s = *this;
    if (kind != Kind::A) return s;
    auto rank_of = [](Deco d) { return d == Deco::Prime ? 0 : d == Deco::None ? 1 : 2; };
    // Table order: prime before none before minus on the left.
    if (rank_of(s.left) > rank_of(s.right)) std::swap(s.left, s.right);
    return s;
}

std::string ShapeLabel::ascii() const
{
    auto suffix = [](Deco d) { return d == Deco::Minus ? "-" : d == Deco::Prime ? "'" : ""; };
    const std::string num = std::to_string(n);
    switch (kind) {
    case Kind::A: {
        std::string pre = left == Deco::Minus ? "v" : left == Deco::Prime ? "^" : "";
        return pre + "A" + num + suffix(right);
    }
    case Kind::D: return "D" + num + suffix(right);
    case Kind::E: return "E" + num + (n == 7 ? "" : "-");
    case Kind::AffA: return "~A" + num;
    case Kind::AffD: return "~D" + num;
    case Kind::AffE: return "~E" + num;
    case Kind::AffA1Star: return "~A1*";
    case Kind::IrrA1: return "irr:A1";
    case Kind::IrrDownA1: return "irr:vA1-";
    case Kind::IrrAffA1: return "irr:~A1";
    }
    return "?";
}

std::string ShapeLabel::dynkin_type() const
{
    const std::string num = std::to_string(n);
    switch (kind) {
    case Kind::A: return "A" + num;
    case Kind::D: return "D" + num;
    case Kind::E: return "E" + num;
    case Kind::AffA: return "~A" + num;
    case Kind::AffD: return "~D" + num;
    case Kind::AffE: return "~E" + num;
    case Kind::IrrA1:
    case Kind::IrrDownA1: return "A1";
    case Kind::AffA1Star:
    case Kind::IrrAffA1: return "~A1";
    }
    return "?";
}

ShapeLabel parse_shape(const std::string& text)
{
    auto fail = [&]() -> ShapeLabel {
        throw Error(ErrorKind::UnknownShape, "unrecognized shape label '" + text + "'");
    };
    if (text == "irr:A1") return {Kind::IrrA1, 1};
    if (text == "irr:vA1-") return {Kind::IrrDownA1, 1, Deco::Minus, Deco::Minus};
    if (text == "irr:~A1") return {Kind::IrrAffA1, 1};
    if (text == "~A1*") return {Kind::AffA1Star, 1};
    std::string s = text;
    ShapeLabel out;
    bool aff = false;
    if (!s.empty() && s[0] == '~') {
        aff = true;
        s.erase(0, 1);
    }
    if (!s.empty() && (s[0] == 'v' || s[0] == '^')) {
        out.left = s[0] == 'v' ? Deco::Minus : Deco::Prime;
        s.erase(0, 1);
    }
    if (s.empty()) return fail();
    char letter = s[0];
    s.erase(0, 1);
    if (!s.empty() && (s.back() == '-' || s.back() == '\'')) {
        out.right = s.back() == '-' ? Deco::Minus : Deco::Prime;
        s.pop_back();
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) return fail();
    out.n = std::stoi(s);
    switch (letter) {
    case 'A': out.kind = aff ? Kind::AffA : Kind::A; break;
    case 'D': out.kind = aff ? Kind::AffD : Kind::D; break;
    case 'E': out.kind = aff ? Kind::AffE : Kind::E; break;
    default: return fail();
    }
    if (out.kind == Kind::E) out.right = Deco::None;
    return out;
}

ShapeLabel oriented_shape(const RootSystem& rs, Mask c)
{
    auto unclassifiable = [&]() -> ShapeLabel {
        std::string v;
        for (int x : vertices_of(c)) v += std::to_string(x) + " ";
        throw Error(ErrorKind::Unclassifiable, "no table pattern for component { " + v + "}");
    };
    const auto verts = vertices_of(c);
    if ((c & kCycleMask) == 0) {
        if (verts.size() == 1) {
            ShapeLabel s{verts[0] < 21 ? Kind::IrrA1 : Kind::IrrDownA1, 1};
            if (s.kind == Kind::IrrDownA1) s.left = s.right = Deco::Minus;
            return s;
        }
        if (verts.size() == 2 && rs(verts[0], verts[1]) == 2) return {Kind::IrrAffA1, 1};
        return unclassifiable();
    }
    if (verts.size() == 2 && rs(verts[0], verts[1]) == 2) return {Kind::AffA1Star, 1};
    if (c & 0xe00000) return unclassifiable();

    const Mask cyc = c & kCycleMask;
    const int m = popcount(cyc);
    if (m == kCycle) {
        if (c != cyc) return unclassifiable();
        return {Kind::AffA, 17};
    }
    int s = 0;
    while (!(cyc >> s & 1) || (cyc >> ((s + kCycle - 1) % kCycle) & 1)) ++s;
    for (int k = 0; k < m; ++k)
        if (!(cyc >> ((s + k) % kCycle) & 1)) return unclassifiable();  // not an arc
    const int t = (s + m - 1) % kCycle;

    // Positions along the arc of the corners carrying a leaf.
    std::vector<int> leaf_pos;
    for (int leaf = 18; leaf <= 20; ++leaf) {
        if (!(c >> leaf & 1)) continue;
        int corner = (leaf - 18) * 6;
        leaf_pos.push_back((corner - s + kCycle) % kCycle);
    }
    std::sort(leaf_pos.begin(), leaf_pos.end());
    const bool left_leaf = !leaf_pos.empty() && leaf_pos.front() == 0;
    const bool right_leaf = !leaf_pos.empty() && leaf_pos.back() == m - 1 && !(m == 1);
    std::vector<int> inner;
    for (int p : leaf_pos)
        if (p != 0 && p != m - 1) inner.push_back(p);

    auto flank = [](int v) { return v % 2 ? Deco::Minus : Deco::None; };
    const Deco left_flank = flank((s + kCycle - 1) % kCycle);
    const Deco right_flank = flank((t + 1) % kCycle);
    const int size = m + static_cast<int>(leaf_pos.size());

    if (inner.empty()) {
        ShapeLabel out{Kind::A, size};
        out.left = left_leaf ? Deco::Prime : left_flank;
        out.right = right_leaf ? Deco::Prime : right_flank;
        return out;
    }
    if (inner.size() == 1) {
        const int k = inner[0];
        const int p = k + (left_leaf ? 1 : 0);
        const int q = m - 1 - k + (right_leaf ? 1 : 0);
        const int lo = std::min(p, q), hi = std::max(p, q);
        if (lo == 1) {
            ShapeLabel out{Kind::D, size};
            const bool long_right = q >= p;
            const bool leaf_end = long_right ? right_leaf : left_leaf;
            out.right = leaf_end ? Deco::Prime : (long_right ? right_flank : left_flank);
            return out;
        }
        if (lo == 2 && hi <= 4) return {Kind::E, size};
        if (lo == 3 && hi == 3) return {Kind::AffE, 7};
        if (lo == 2 && hi == 5) return {Kind::AffE, 8};
        return unclassifiable();
    }
    if (inner.size() == 2 && !left_leaf && !right_leaf && inner[0] == 1 && inner[1] == m - 2)
        return {Kind::AffD, size - 1};
    return unclassifiable();
}

ShapeLabel shape(const RootSystem& rs, Mask c)
{
    return oriented_shape(rs, c).normalized();
}

Mask relevant_content(const RootSystem& rs, Mask g)
{
    Mask out = 0;
    for (Mask c : components(rs, g))
        if (c & kCycleMask) out |= c;
    return out;
}

SymmetryAction automorphism_group(const RootSystem& rs)
{
    SymmetryAction out;
    // Visit vertices in breadth-first order so each new vertex touches an
    // already mapped one.
    std::vector<int> order{0};
    std::vector<bool> seen(kRoots, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : vertices_of(rs.neighbours(order[i])))
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
    auto signature = [&](int v) {
        std::vector<int> row(rs.gram[v].begin(), rs.gram[v].end());
        std::sort(row.begin(), row.end());
        return row;
    };
    Perm img{};
    std::vector<bool> used(kRoots, false);
    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == order.size()) {
            out.s3.push_back(img);
            return;
        }
        const int v = order[depth];
        for (int w = 0; w < kRoots; ++w) {
            if (used[w] || signature(v) != signature(w)) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d)
                ok = rs(v, order[d]) == rs(w, img[order[d]]);
            if (!ok) continue;
            img[v] = w;
            used[w] = true;
            extend(depth + 1);
            used[w] = false;
        }
    };
    extend(0);
    std::sort(out.s3.begin(), out.s3.end());

    for (int k = 0; k < kCycle; k += 2)
        for (int refl = 0; refl < 2; ++refl) {
            Perm p{};
            for (int i = 0; i < kRoots; ++i) p[i] = i;
            for (int i = 0; i < kCycle; ++i) p[i] = refl ? (k - i + kCycle) % kCycle : (i + k) % kCycle;
            out.d9.push_back(p);
        }
    return out;
}

MaskPermuter::MaskPermuter(const Perm& p)
{
    for (int byte = 0; byte < 3; ++byte)
        for (int x = 0; x < 256; ++x) {
            Mask m = 0;
            for (int bit = 0; bit < 8; ++bit)
                if (x >> bit & 1) m |= Mask{1} << p[byte * 8 + bit];
            t_[byte][x] = m;
        }
}

namespace {

const std::vector<MaskPermuter>& permuters(bool dihedral)
{
    static const auto make = [](const std::vector<Perm>& ps) {
        std::vector<MaskPermuter> out;
        for (const auto& p : ps) out.emplace_back(p);
        return out;
    };
    static const SymmetryAction sym = automorphism_group(roots());
    static const std::vector<MaskPermuter> s3 = make(sym.s3);
    static const std::vector<MaskPermuter> d9 = make(sym.d9);
    return dihedral ? d9 : s3;
}

}  // namespace

Mask canonical_s3(Mask m)
{
    Mask best = m;
    for (const auto& p : permuters(false)) best = std::min(best, p(m));
    return best;
}

Mask canonical_d9(Mask m)
{
    Mask best = m;
    for (const auto& p : permuters(true)) best = std::min(best, p(m));
    return best;
}

std::vector<Mask> s3_orbit(Mask m)
{
    std::vector<Mask> out;
    for (const auto& p : permuters(false)) out.push_back(p(m));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct EllipticSearch {
    const RootSystem& rs;
    int max_rank;
    std::array<std::array<std::int64_t, kRoots>, kRoots> neg{};  // -Gram
    std::array<Mask, kRoots> bad{};  // double or dashed neighbours
    const std::vector<MaskPermuter>& perms;

    int verts[kRoots]{};
    std::int64_t row[kRoots + 1][kRoots + 1]{};  // row[j][k] = a[j][k]^(k-1)
    EnumerationResult res;

    EllipticSearch(const RootSystem& r, int max_r)
        : rs(r), max_rank(max_r), perms(permuters(false))
    {
        for (int i = 0; i < kRoots; ++i)
            for (int j = 0; j < kRoots; ++j) {
                neg[i][j] = -rs(i, j);
                if (i != j && rs(i, j) >= 2) bad[i] |= Mask{1} << j;
            }
        res.max_rank = max_rank;
        res.total.assign(max_rank + 1, 0);
        res.orbits.assign(max_rank + 1, 0);
        res.representatives.assign(max_rank + 1, {});
    }

    void record(Mask m, int n)
    {
        ++res.total[n];
        for (const auto& p : perms)
            if (p(m) < m) return;
        ++res.orbits[n];
        res.representatives[n].push_back(m);
    }

    // Appends v as index n; returns the new leading principal minor.
    std::int64_t extend(int n, int v)
    {
        std::int64_t* x = row[n];
        for (int j = 0; j < n; ++j) x[j] = neg[v][verts[j]];
        x[n] = 2;
        std::int64_t prev = 1;
        for (int k = 0; k < n; ++k) {
            const std::int64_t pk = row[k][k];
            const std::int64_t xk = x[k];
            for (int j = k + 1; j <= n; ++j) {
                const std::int64_t rkj = j < n ? row[j][k] : xk;
                x[j] = (pk * x[j] - xk * rkj) / prev;
            }
            prev = pk;
        }
        return x[n];
    }

    void dfs(int n, Mask m, Mask forbidden, int last)
    {
        record(m, n);
        if (n == max_rank) return;
        for (int v = last + 1; v < kRoots; ++v) {
            if (forbidden >> v & 1) continue;
            if (extend(n, v) <= 0) continue;
            verts[n] = v;
            dfs(n + 1, m | (Mask{1} << v), forbidden | bad[v], v);
        }
    }

    void run_from(int first)
    {
        if (extend(0, first) <= 0) return;
        verts[0] = first;
        dfs(1, Mask{1} << first, bad[first], first);
    }
};

void merge_into(EnumerationResult& out, const EnumerationResult& part)
{
    for (int r = 0; r <= out.max_rank; ++r) {
        out.total[r] += part.total[r];
        out.orbits[r] += part.orbits[r];
        out.representatives[r].insert(out.representatives[r].end(),
                                      part.representatives[r].begin(),
                                      part.representatives[r].end());
    }
}

}  // namespace

EnumerationResult enumerate_elliptic(const RootSystem& rs, int max_rank, int threads)
{
    max_rank = std::clamp(max_rank, 0, kRoots);
    EnumerationResult out;
    out.max_rank = max_rank;
    out.total.assign(max_rank + 1, 0);
    out.orbits.assign(max_rank + 1, 0);
    out.representatives.assign(max_rank + 1, {});
    out.total[0] = out.orbits[0] = 1;
    out.representatives[0].push_back(0);
    if (max_rank == 0) return out;

    threads = std::max(1, threads);
    std::vector<EnumerationResult> parts(kRoots);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int v; (v = next++) < kRoots;) {
            EllipticSearch s(rs, max_rank);
            s.run_from(v);
            s.res.total[0] = 0;
            parts[v] = std::move(s.res);
        }
    };
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& p : parts) merge_into(out, p);
    for (auto& reps : out.representatives) std::sort(reps.begin(), reps.end());
    return out;
}

const EnumerationResult& full_enumeration()
{
    static const EnumerationResult res = [] {
        unsigned hw = std::thread::hardware_concurrency();
        return enumerate_elliptic(roots(), 19, hw ? static_cast<int>(hw) : 1);
    }();
    return res;
}

ConnectedCatalog connected_catalog(const RootSystem& rs)
{
    ConnectedCatalog cat;
    std::unordered_set<Mask> seen;
    std::vector<Mask> frontier;
    for (int v = 0; v < kRoots; ++v) {
        frontier.push_back(Mask{1} << v);
        seen.insert(Mask{1} << v);
    }
    while (!frontier.empty()) {
        Mask c = frontier.back();
        frontier.pop_back();
        DiagramClass cls = definiteness(rs, c);
        if (cls == DiagramClass::Parabolic) {
            cat.affine.push_back(c);
            continue;
        }
        if (cls != DiagramClass::Elliptic) continue;
        cat.elliptic.push_back(c);
        Mask nb = 0;
        for (int v : vertices_of(c)) nb |= rs.neighbours(v);
        for (int v : vertices_of(nb & ~c)) {
            Mask d = c | (Mask{1} << v);
            if (seen.insert(d).second) frontier.push_back(d);
        }
    }
    std::sort(cat.elliptic.begin(), cat.elliptic.end());
    std::sort(cat.affine.begin(), cat.affine.end());
    return cat;
}

ParabolicSurvey survey_parabolics(const RootSystem& rs)
{
    const ConnectedCatalog cat = connected_catalog(rs);
    const std::unordered_set<Mask> ell(cat.elliptic.begin(), cat.elliptic.end());
    const std::unordered_set<Mask> aff(cat.affine.begin(), cat.affine.end());
    std::array<Mask, kRoots> nb{};
    for (int v = 0; v < kRoots; ++v) nb[v] = rs.neighbours(v);

    auto grow = [&](Mask s, Mask seed) {
        Mask cur = seed & s;
        while (true) {
            Mask next = cur;
            for (Mask r = cur; r; r &= r - 1) next |= nb[__builtin_ctz(r)] & s;
            if (next == cur) return cur;
            cur = next;
        }
    };
    // 0: not semidefinite, 1: merged component elliptic, 2: affine.
    auto add_kind = [&](Mask s, int v) {
        Mask merged = grow(s, nb[v]) | (Mask{1} << v);
        if (ell.count(merged)) return 1;
        if (aff.count(merged)) return 2;
        return 0;
    };

    ParabolicSurvey out;
    std::vector<Mask> reached;
    std::function<void(Mask, int, int)> dfs = [&](Mask s, int nullity, int last) {
        if (nullity > 0) {
            ++out.parabolic_count;
            bool maximal = true;
            for (int u = 0; u < kRoots && maximal; ++u)
                if (!(s >> u & 1) && add_kind(s, u)) maximal = false;
            if (maximal) out.maximal.push_back(s);
        }
        for (int v = last + 1; v < kRoots; ++v) {
            if (s >> v & 1) continue;
            int k = add_kind(s, v);
            if (k) dfs(s | (Mask{1} << v), nullity + (k == 2), v);
        }
    };
    dfs(0, 0, -1);

    std::sort(out.maximal.begin(), out.maximal.end());
    for (Mask m : out.maximal) out.maximal_mod_s3.push_back(canonical_s3(m));
    std::sort(out.maximal_mod_s3.begin(), out.maximal_mod_s3.end());
    out.maximal_mod_s3.erase(std::unique(out.maximal_mod_s3.begin(), out.maximal_mod_s3.end()),
                             out.maximal_mod_s3.end());

    // Greedy climb from every affine component must end in a listed maximal set.
    out.all_contained = true;
    for (Mask a : cat.affine) {
        Mask s = a;
        for (int u = 0; u < kRoots; ++u)
            if (!(s >> u & 1) && add_kind(s, u)) s |= Mask{1} << u;
        if (!std::binary_search(out.maximal.begin(), out.maximal.end(), s)) out.all_contained = false;
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> maximal_parabolic_lists()
{
    using namespace lists;
    return {{affine_A17()},
            {affine_D10(), affine_E7()},
            {affine_E8_1(), affine_E8_2(), affine_A1_irr()},
            {affine_D16(), affine_A1_star()}};
}

}  // namespace k3deg
