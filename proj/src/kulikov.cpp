#include "k3deg/kulikov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace k3deg {

bool parity_check(const AVector& a)
{
    if (!a.is_integral()) return false;
    for (int i = 0; i < kRoots; ++i)
        if ((i % 2 == 1 || i >= kCycle) && numerator(a.a[i]) % 2 != 0) return false;
    return true;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

using LP = LatticePoint;

long long orient(const LP& a, const LP& b, const LP& c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

LP to_lp(const Point& p)
{
    if (denominator(p.x) != 1 || denominator(p.y) != 1)
        throw Error(ErrorKind::ParityViolation, "polygon vertex is not a lattice point");
    return {numerator(p.x).convert_to<long long>(), numerator(p.y).convert_to<long long>()};
}

// Ring edge kinds: equator side, or one of the two edges of cut k.
struct EdgeKind {
    int cut = -1;        // -1 for the equator
    bool left = false;   // base0 -> apex
};

class Mesh {
public:
    std::vector<LP> pts;
    std::vector<std::array<int, 3>> tri;
    std::vector<std::array<int, 3>> nb;

    void link_all()
    {
        nb.assign(tri.size(), {-1, -1, -1});
        std::map<std::pair<int, int>, std::pair<int, int>> half;
        for (int t = 0; t < static_cast<int>(tri.size()); ++t)
            for (int i = 0; i < 3; ++i) half[{tri[t][(i + 1) % 3], tri[t][(i + 2) % 3]}] = {t, i};
        for (int t = 0; t < static_cast<int>(tri.size()); ++t)
            for (int i = 0; i < 3; ++i) {
                auto it = half.find({tri[t][(i + 2) % 3], tri[t][(i + 1) % 3]});
                if (it != half.end()) nb[t][i] = it->second.first;
            }
    }

    // Triangle containing p (closed), or -1.
    int locate(const LP& p, int start) const
    {
        int t = start;
        for (int step = 0; t >= 0 && step < 4096; ++step) {
            int move = -1;
            for (int i = 0; i < 3 && move < 0; ++i)
                if (orient(pts[tri[t][(i + 1) % 3]], pts[tri[t][(i + 2) % 3]], p) < 0) move = i;
            if (move < 0) return t;
            t = nb[t][move];
        }
        for (int u = 0; u < static_cast<int>(tri.size()); ++u) {
            bool in = true;
            for (int i = 0; i < 3 && in; ++i)
                if (orient(pts[tri[u][(i + 1) % 3]], pts[tri[u][(i + 2) % 3]], p) < 0) in = false;
            if (in) return u;
        }
        return -1;
    }

    int insert(int p, int t)
    {
        const LP& q = pts[p];
        int on_edge = -1;
        for (int i = 0; i < 3; ++i)
            if (orient(pts[tri[t][(i + 1) % 3]], pts[tri[t][(i + 2) % 3]], q) == 0) on_edge = i;
        std::vector<int> touched;
        std::vector<int> outer;
        auto add_outer = [&](int u) {
            for (int k = 0; k < 3; ++k)
                if (nb[u][k] >= 0) outer.push_back(nb[u][k]);
        };
        if (on_edge < 0) {
            const auto [a, b, c] = tri[t];
            add_outer(t);
            tri[t] = {a, b, p};
            tri.push_back({b, c, p});
            tri.push_back({c, a, p});
            touched = {t, static_cast<int>(tri.size()) - 2, static_cast<int>(tri.size()) - 1};
        } else {
            const int u = nb[t][on_edge];
            if (u < 0) throw Error(ErrorKind::Degenerate, "interior point on the polygon boundary");
            const int a = tri[t][(on_edge + 1) % 3], b = tri[t][(on_edge + 2) % 3], c = tri[t][on_edge];
            int d = -1;
            for (int k = 0; k < 3; ++k)
                if (tri[u][k] != a && tri[u][k] != b) d = tri[u][k];
            add_outer(t);
            add_outer(u);
            tri[t] = {a, p, c};
            tri[u] = {p, b, c};
            tri.push_back({b, p, d});
            tri.push_back({p, a, d});
            touched = {t, u, static_cast<int>(tri.size()) - 2, static_cast<int>(tri.size()) - 1};
        }
        nb.resize(tri.size(), {-1, -1, -1});
        std::vector<int> cand = touched;
        cand.insert(cand.end(), outer.begin(), outer.end());
        for (int x : touched)
            for (int i = 0; i < 3; ++i) {
                const int e0 = tri[x][(i + 1) % 3], e1 = tri[x][(i + 2) % 3];
                nb[x][i] = -1;
                for (int y : cand) {
                    if (y == x) continue;
                    for (int j = 0; j < 3; ++j)
                        if (tri[y][(j + 1) % 3] == e1 && tri[y][(j + 2) % 3] == e0) {
                            nb[x][i] = y;
                            nb[y][j] = x;
                        }
                }
            }
        return t;
    }
};

std::vector<std::array<int, 3>> clip_ears(const std::vector<LP>& ring)
{
    std::vector<int> idx(ring.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::array<int, 3>> out;
    std::size_t start = 0;
    while (idx.size() > 3) {
        const std::size_t n = idx.size();
        bool clipped = false;
        for (std::size_t k = 0; k < n && !clipped; ++k) {
            const std::size_t j = (start + k) % n;
            const int p = idx[(j + n - 1) % n], c = idx[j], q = idx[(j + 1) % n];
            if (orient(ring[p], ring[c], ring[q]) <= 0) continue;
            bool empty = true;
            for (int r : idx) {
                if (r == p || r == c || r == q) continue;
                if (orient(ring[p], ring[c], ring[r]) >= 0 && orient(ring[c], ring[q], ring[r]) >= 0 &&
                    orient(ring[q], ring[p], ring[r]) >= 0) {
                    empty = false;
                    break;
                }
            }
            if (!empty) continue;
            out.push_back({p, c, q});
            idx.erase(idx.begin() + static_cast<long>(j));
            start = j == 0 ? 0 : j - 1;
            clipped = true;
        }
        if (!clipped) throw Error(ErrorKind::Degenerate, "polygon admits no ear; it is not simple");
    }
    if (orient(ring[idx[0]], ring[idx[1]], ring[idx[2]]) <= 0)
        throw Error(ErrorKind::Degenerate, "degenerate final ear");
    out.push_back({idx[0], idx[1], idx[2]});
    return out;
}

}  // namespace

Triangulation triangulate(const RootSystem& rs, const AVector& a)
{
    if (!parity_check(a)) throw Error(ErrorKind::ParityViolation, "a-vector violates the parity condition");
    if (norm(rs, a) <= 0) throw Error(ErrorKind::Degenerate, "triangulations need a positive square");
    const SymingtonPolytope poly = symington(rs, a, Placement::VertexPreferred);

    // Ring of boundary lattice points with the kind of the edge leaving each point.
    const std::vector<Point> bnd = poly.boundary();
    std::vector<LP> ring;
    std::vector<EdgeKind> kind;
    for (std::size_t i = 0; i < bnd.size(); ++i) {
        const Point &P = bnd[i], &Q = bnd[(i + 1) % bnd.size()];
        EdgeKind k;
        for (int c = 0; c < 3; ++c) {
            const Cut& cut = poly.cuts[c];
            if (cut.size == 0) continue;
            if (P == cut.base0 && Q == cut.apex) k = {c, true};
            if (P == cut.apex && Q == cut.base1) k = {c, false};
        }
        const LP p = to_lp(P), q = to_lp(Q);
        const long long dx = q.x - p.x, dy = q.y - p.y, g = std::gcd(std::llabs(dx), std::llabs(dy));
        for (long long s = 0; s < g; ++s) {
            ring.push_back({p.x + s * dx / g, p.y + s * dy / g});
            kind.push_back(k);
        }
    }
    // Distinct points; touching surgery triangles leave zero-width slits in
    // the ring, which are peeled off before ear clipping.
    const int nr = static_cast<int>(ring.size());
    std::map<LP, int> index;
    std::vector<LP> distinct;
    std::vector<int> rid(nr);
    for (int i = 0; i < nr; ++i) {
        auto [it, fresh] = index.emplace(ring[i], static_cast<int>(distinct.size()));
        if (fresh) distinct.push_back(ring[i]);
        rid[i] = it->second;
    }
    std::vector<int> outline = rid;
    for (bool peeled = true; peeled && outline.size() > 3;) {
        peeled = false;
        const std::size_t m = outline.size();
        for (std::size_t i = 0; i < m; ++i)
            if (outline[(i + m - 1) % m] == outline[(i + 1) % m]) {
                const std::size_t hi = std::max(i, (i + 1) % m), lo = std::min(i, (i + 1) % m);
                outline.erase(outline.begin() + static_cast<long>(hi));
                outline.erase(outline.begin() + static_cast<long>(lo));
                peeled = true;
                break;
            }
    }
    if (std::set<int>(outline.begin(), outline.end()).size() != outline.size())
        throw Error(ErrorKind::Degenerate, "polygon boundary touches itself");

    Triangulation t;
    Mesh mesh;
    mesh.pts = distinct;
    {
        std::vector<LP> simple;
        for (int i : outline) simple.push_back(distinct[i]);
        for (auto tr : clip_ears(simple)) mesh.tri.push_back({outline[tr[0]], outline[tr[1]], outline[tr[2]]});
    }
    mesh.link_all();

    long long lo_x = ring[0].x, hi_x = lo_x, lo_y = ring[0].y, hi_y = lo_y;
    for (const LP& p : ring) {
        lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
    }
    // Crossing test against the outline; boundary lattice points are already vertices.
    auto inside = [&](const LP& p) {
        bool in = false;
        const std::size_t m = outline.size();
        for (std::size_t i = 0; i < m; ++i) {
            const LP &a = distinct[outline[i]], &b = distinct[outline[(i + 1) % m]];
            if ((a.y > p.y) != (b.y > p.y)) {
                const long long o = orient(a, b, p);
                if ((b.y > a.y) == (o > 0)) in = !in;
            }
        }
        return in;
    };
    int hint = 0;
    for (long long x = lo_x; x <= hi_x; ++x)
        for (long long y = lo_y; y <= hi_y; ++y) {
            const LP p{x, y};
            if (index.count(p) || !inside(p)) continue;
            const int tr = mesh.locate(p, hint);
            if (tr < 0) continue;
            mesh.pts.push_back(p);
            hint = mesh.insert(static_cast<int>(mesh.pts.size()) - 1, tr);
        }
    for (const auto& tr : mesh.tri)
        if (orient(mesh.pts[tr[0]], mesh.pts[tr[1]], mesh.pts[tr[2]]) != 1)
            throw Error(ErrorKind::Degenerate, "triangle without unit lattice volume");

    t.points = mesh.pts;
    t.triangles = mesh.tri;
    const int n = static_cast<int>(t.points.size());
    const int nb = static_cast<int>(distinct.size());
    for (int i = nb; i < n; ++i) index[t.points[i]] = i;
    t.on_equator.assign(n, false);
    for (int i = 0; i < nr; ++i)
        if (kind[i].cut < 0) t.on_equator[rid[i]] = t.on_equator[rid[(i + 1) % nr]] = true;

    std::map<std::pair<int, int>, int> edge_id;
    auto key = [](int x, int y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
    for (const auto& tr : t.triangles)
        for (int i = 0; i < 3; ++i) edge_id.emplace(key(tr[i], tr[(i + 1) % 3]), static_cast<int>(edge_id.size()));
    for (int i = 0; i < nr; ++i) edge_id.emplace(key(rid[i], rid[(i + 1) % nr]), static_cast<int>(edge_id.size()));
    const int ne = static_cast<int>(edge_id.size());

    Dsu vd(2 * n), ed(2 * ne);
    auto edge_of = [&](int x, int y) { return edge_id.at(key(x, y)); };
    for (int i = 0; i < nr; ++i) {
        if (kind[i].cut >= 0) continue;
        const int a = rid[i], b = rid[(i + 1) % nr];
        vd.unite(a, n + a);
        vd.unite(b, n + b);
        const int eid = edge_of(a, b);
        ed.unite(eid, ne + eid);
    }
    for (int i = 0; i < nr; ++i) {
        if (kind[i].cut < 0 || !kind[i].left) continue;
        const Cut& cut = poly.cuts[kind[i].cut];
        const LP apex = to_lp(cut.apex);
        const LP w = to_lp(cut.axis);
        auto shear = [&](const LP& x) {
            const long long d = (x.x - apex.x) * w.y - (x.y - apex.y) * w.x;
            const LP y{x.x + d * w.x, x.y + d * w.y};
            auto it = index.find(y);
            if (it == index.end() || it->second >= nb)
                throw Error(ErrorKind::Inconsistent, "cut edges do not carry matching subdivisions");
            return it->second;
        };
        const int a = rid[i], b = rid[(i + 1) % nr];
        const int sa = shear(ring[i]), sb = shear(ring[(i + 1) % nr]);
        const auto image = edge_id.find(key(sa, sb));
        if (image == edge_id.end())
            throw Error(ErrorKind::Inconsistent, "cut edges do not carry matching subdivisions");
        const int e0 = edge_of(a, b), e1 = image->second;
        for (int c = 0; c < 2; ++c) {
            vd.unite(c * n + a, c * n + sa);
            vd.unite(c * n + b, c * n + sb);
            ed.unite(c * ne + e0, c * ne + e1);
        }
    }

    std::map<int, int> vclass;
    t.vertex_class.resize(n);
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = vclass.emplace(vd.find(c * n + i), static_cast<int>(vclass.size()));
            t.vertex_class[i][c] = it->second;
        }
    std::set<int> eclass;
    std::set<int> eq_edges;
    for (int x = 0; x < 2 * ne; ++x) eclass.insert(ed.find(x));
    for (int i = 0; i < nr; ++i)
        if (kind[i].cut < 0) eq_edges.insert(ed.find(edge_of(rid[i], rid[(i + 1) % nr])));

    t.v = static_cast<int>(vclass.size());
    t.e = static_cast<int>(eclass.size());
    t.f = 2 * static_cast<int>(t.triangles.size());
    t.e_E = static_cast<int>(eq_edges.size());
    t.class_on_equator.assign(t.v, false);
    for (int i = 0; i < n; ++i)
        if (t.on_equator[i]) t.class_on_equator[t.vertex_class[i][0]] = true;
    t.v_E = static_cast<int>(std::count(t.class_on_equator.begin(), t.class_on_equator.end(), true));

    t.charge.assign(t.v, 0);
    auto class_at = [&](const Point& p, int copy) { return t.vertex_class[index.at(to_lp(p))][copy]; };
    for (const Point& p : poly.corners) ++t.charge[class_at(p, 0)];
    for (const Cut& cut : poly.cuts) {
        ++t.charge[class_at(cut.apex, 0)];
        ++t.charge[class_at(cut.apex, 1)];
    }
    std::set<int> north;
    for (int i = 0; i < n; ++i) north.insert(t.vertex_class[i][0]);
    for (int c = 0; c < t.v; ++c) {
        if (t.class_on_equator[c]) t.q_E += t.charge[c];
        else if (north.count(c)) t.q_N += t.charge[c];
    }
    if (t.q_E + 2 * t.q_N != 24) throw Error(ErrorKind::Inconsistent, "charges do not add up to 24");
    return t;
}

int dsemistable_dimension(const Triangulation& t)
{
    return t.e - 3 * t.v + 25;
}

std::pair<int, int> eigenranks(const Triangulation& t)
{
    const int h = (t.e - 3 * t.v) / 2, eq = (t.e_E - t.v_E) / 2;
    return {h + eq + t.q_N + 1, h - eq + t.q_E + t.q_N};
}

namespace {

std::string join(const std::vector<Slice>& slices)
{
    std::string s;
    for (const Slice& x : slices) s += (s.empty() ? "" : " ") + x.shape.ascii();
    return s;
}

}  // namespace

DegenerationLabel label_of_diagram(const RootSystem& rs, Mask g)
{
    DegenerationLabel l;
    const DualDecomposition d = dual_decomposition(rs, g);
    l.type2 = d.type2;
    l.slices = d.slices;
    l.text = join(d.slices);
    const bool on_cycle = (relevant_content(rs, g) & ~kCycleMask) == 0;
    l.symmetry = on_cycle ? "D9" : "S3";
    const auto& group = on_cycle ? automorphism_group(rs).d9 : automorphism_group(rs).s3;
    l.canonical = l.text;
    for (const Perm& p : group) l.canonical = std::min(l.canonical, join(dual_decomposition(rs, apply_perm(p, g)).slices));
    return l;
}

DegenerationLabel stable_model_label(const RootSystem& rs, const AVector& a)
{
    if (!in_fundamental(a)) throw Error(ErrorKind::NotInCone, "a-vector is not in the chamber");
    return label_of_diagram(rs, a.zero_set());
}

const char* fate_name(Fate f)
{
    switch (f) {
    case Fate::Big: return "big";
    case Fate::NefNotBig: return "nef-not-big";
    case Fate::Trivial: return "trivial";
    }
    return "?";
}

std::vector<ComponentFate> contraction_plan(const RootSystem& rs, const Triangulation& t, const AVector& a)
{
    const SingularLocus loc = singular_locus(rs, a, Placement::VertexPreferred);
    std::map<LP, int> index;
    for (int i = 0; i < static_cast<int>(t.points.size()); ++i) index[t.points[i]] = i;
    std::map<int, std::vector<const Cluster*>> at;
    for (const Cluster& c : loc.clusters) {
        const int copy = c.position.find("south") != std::string::npos ? 1 : 0;
        at[t.vertex_class[index.at(to_lp(c.where))][copy]].push_back(&c);
    }
    std::vector<ComponentFate> out;
    for (int v = 0; v < t.v; ++v) {
        ComponentFate f;
        f.vertex_class = v;
        f.charge = t.charge[v];
        if (!t.class_on_equator[v]) {
            f.fate = Fate::Trivial;
            out.push_back(f);
            continue;
        }
        f.fate = Fate::NefNotBig;
        for (const Cluster* c : at[v]) {
            std::string name;
            bool relevant = true;
            if (c->vertices) {
                name = c->shape.ascii();
                relevant = !c->shape.irrelevant();
            } else {
                const int k = std::stoi(c->position.substr(c->position.find(' ') + 1));
                name = (k + kCycle - 1) % 2 ? "vA0" : "A0-";
            }
            f.shape += (f.shape.empty() ? "" : "+") + name;
            if (relevant) f.fate = Fate::Big;
        }
        out.push_back(f);
    }
    return out;
}

TypeIIModel typeII_model(const RootSystem& rs, const AVector& a)
{
    if (!in_fundamental(a)) throw Error(ErrorKind::NotInCone, "a-vector is not in the chamber");
    if (norm(rs, a) != 0 || a.zero_set() == (Mask{1} << kRoots) - 1)
        throw Error(ErrorKind::Degenerate, "type II models need a nonzero isotropic a-vector");
    if (!a.is_integral()) throw Error(ErrorKind::NotPrimitive, "a-vector must be integral");
    TypeIIModel m;
    Int g = 0;
    for (const Rat& x : a.a) g = gcd(g, numerator(x));
    m.m = g;
    for (Mask comp : components(rs, relevant_content(rs, a.zero_set()))) m.halves.push_back(shape(rs, comp).ascii());
    std::sort(m.halves.begin(), m.halves.end());
    auto has = [&](const std::string& s) { return std::count(m.halves.begin(), m.halves.end(), s); };
    const Int& M = m.m;
    auto ruled = [&](Int from, Int to) {
        if (from <= to) m.components.push_back({from, to, "ruled surface over E"});
    };
    if (has("~A17") || has("~E8") == 2) {
        if (M % 2 != 0) throw Error(ErrorKind::OddMultiple, "this direction needs an even multiple");
        const Int mid = M / 2;
        if (has("~A17")) {
            m.components.push_back({0, 0, "rational cap (P2, cubic)"});
            ruled(1, mid - 1);
            m.components.push_back({mid, mid, "~A17 surface, poles resolved"});
            ruled(mid + 1, M - 1);
            m.components.push_back({M, M, "rational cap (P2, cubic)"});
        } else {
            m.components.push_back({0, 0, "~E8 pair, invariant pair of points blown up"});
            ruled(1, mid - 1);
            m.components.push_back({mid, mid, "ruled surface for irr:~A1"});
            ruled(mid + 1, M - 1);
            m.components.push_back({M, M, "~E8 pair"});
        }
    } else if (m.halves.size() == 2) {
        m.components.push_back({0, 0, m.halves[0] + " pair"});
        ruled(1, M - 1);
        m.components.push_back({M, M, m.halves[1] + " pair"});
    } else {
        throw Error(ErrorKind::Unclassifiable, "unexpected type II diagram");
    }
    return m;
}

nlohmann::json to_json(const Triangulation& t)
{
    const auto [np, nm] = eigenranks(t);
    return {{"v", t.v},     {"e", t.e},     {"f", t.f},     {"e_E", t.e_E},     {"v_E", t.v_E},
            {"q_E", t.q_E}, {"q_N", t.q_N}, {"n_plus", np}, {"n_minus", nm},
            {"euler", t.v - t.e + t.f}, {"dsemistable_dimension", dsemistable_dimension(t)}};
}

nlohmann::json to_json(const DegenerationLabel& l)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const Slice& s : l.slices) {
        nlohmann::json c{{"shape", s.shape.ascii()}, {"first", s.first}};
        if (s.component) c["vertices"] = vertices_of(s.component);
        comps.push_back(c);
    }
    return {{"label", l.text},
            {"canonical", l.canonical},
            {"symmetry", l.symmetry},
            {"type", l.type2 ? 2 : 3},
            {"components", comps}};
}

nlohmann::json to_json(const TypeIIModel& m)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& s : m.components)
        comps.push_back({{"from", rat_json(Rat(s.from))}, {"to", rat_json(Rat(s.to))}, {"component", s.description}});
    return {{"halves", m.halves}, {"m", rat_json(Rat(m.m))}, {"interval", comps}};
}

}  // namespace k3deg
