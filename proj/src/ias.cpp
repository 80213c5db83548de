#include "k3deg/ias.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace k3deg {

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(const Rat& k, const Point& p) { return {k * p.x, k * p.y}; }
Rat cross(const Point& p, const Point& q) { return p.x * q.y - p.y * q.x; }
Rat dot(const Point& p, const Point& q) { return p.x * q.x + p.y * q.y; }

Point ToricFan18::edge(int i) const
{
    const Point& n = v[((i % kCycle) + kCycle) % kCycle];
    return {n.y, -n.x};
}

const ToricFan18& build_fan()
{
    static const ToricFan18 fan = [] {
        ToricFan18 f;
        const int pattern[6] = {3, 1, 4, 1, 4, 1};
        for (int i = 0; i < kCycle; ++i) f.d[i] = pattern[i % 6];
        f.v[0] = {1, 0};
        f.v[1] = {0, 1};
        for (int i = 1; i + 1 < kCycle; ++i) f.v[i + 1] = Rat(f.d[i]) * f.v[i] - f.v[i - 1];
        const Point v18 = Rat(f.d[17]) * f.v[17] - f.v[16];
        const Point v19 = Rat(f.d[0]) * f.v[0] - f.v[17];
        if (!(v18 == f.v[0]) || !(v19 == f.v[1]))
            throw Error(ErrorKind::NotClosed, "toric fan recurrence does not close");
        for (int i = 0; i < kCycle; ++i)
            if (cross(f.v[i], f.v[(i + 1) % kCycle]) != 1)
                throw Error(ErrorKind::NotClosed, "toric fan is not smooth");
        return f;
    }();
    return fan;
}

std::array<Point, kCycle> moment_polytope(const std::array<Rat, kCycle>& bbar)
{
    const auto& fan = build_fan();
    std::array<Point, kCycle> p;
    Point cur;
    for (int i = 0; i < kCycle; ++i) {
        if (bbar[i] < 0) throw Error(ErrorKind::NotClosed, "negative side length");
        p[i] = cur;
        cur = cur + bbar[i] * fan.edge(i);
    }
    if (!(cur == Point{}))
        throw Error(ErrorKind::NotClosed, "side lengths do not close up the polygon");
    return p;
}

Rat lattice_area(const std::vector<Point>& poly)
{
    Rat s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

const char* placement_name(Placement p)
{
    return p == Placement::Symmetric ? "symmetric" : "vertex-preferred";
}

std::vector<Point> SymingtonPolytope::boundary() const
{
    std::vector<Point> out;
    auto push = [&](const Point& q) {
        if (out.empty() || !(out.back() == q)) out.push_back(q);
    };
    for (int i = 0; i < kCycle; ++i) {
        push(corners[i]);
        for (const Cut& c : cuts) {
            if (c.side != i || c.size == 0) continue;
            push(c.base0);
            push(c.apex);
            push(c.base1);
        }
    }
    while (out.size() > 1 && out.back() == out.front()) out.pop_back();
    return out;
}

namespace {

bool inside_polygon(const ToricFan18& fan, const std::array<Point, kCycle>& corners, const Point& x)
{
    for (int j = 0; j < kCycle; ++j)
        if (dot(fan.v[j], x - corners[j]) < 0) return false;
    return true;
}

// Open interiors of two triangles intersect.
bool overlap(const std::array<Point, 3>& s, const std::array<Point, 3>& t)
{
    auto separated = [](const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
        for (int i = 0; i < 3; ++i) {
            const Point e = a[(i + 1) % 3] - a[i];
            const Rat own = cross(e, a[(i + 2) % 3] - a[i]);
            bool all_out = true;
            for (const Point& q : b) {
                const Rat side = cross(e, q - a[i]);
                if ((own > 0 && side > 0) || (own < 0 && side < 0)) all_out = false;
            }
            if (all_out) return true;
        }
        return false;
    };
    return !separated(s, t) && !separated(t, s);
}

}  // namespace

SymingtonPolytope symington(const RootSystem& rs, const AVector& a, Placement placement)
{
    if (!in_fundamental(a)) throw Error(ErrorKind::NotInCone, "a-vector is not in the chamber");
    if (norm(rs, a) <= 0) throw Error(ErrorKind::ZeroVolume, "a-vector has non-positive square");
    const auto& fan = build_fan();
    const auto b = a.b();
    SymingtonPolytope p;
    p.placement = placement;
    p.bbar = a.bbar();
    p.corners = moment_polytope(p.bbar);
    for (int k = 0; k < 3; ++k) {
        Cut& c = p.cuts[k];
        c.root = 18 + k;
        c.side = 6 * k;
        c.size = b[c.root];
        const Point w = fan.edge(c.side);
        const Point u = Rat(2) * w - fan.edge(c.side - 1);
        c.axis = w;
        if (placement == Placement::VertexPreferred) {
            c.base0 = p.corners[c.side];
        } else {
            const Point mid = p.corners[c.side] + Rat(p.bbar[c.side] / 2) * w;
            c.base0 = mid - Rat(c.size / 2) * w;
        }
        c.base1 = c.base0 + c.size * w;
        c.apex = c.base0 + c.size * u;

        const int opposite = (c.side + 9) % kCycle;
        if (dot(fan.v[opposite], c.apex - p.corners[opposite]) != b[21 + k])
            throw Error(ErrorKind::Inconsistent, "surgery apex is not at the expected distance from the opposite side");
        if (c.size == 0) continue;
        for (const Point& q : {c.base0, c.base1, c.apex})
            if (!inside_polygon(fan, p.corners, q))
                throw Error(ErrorKind::TrianglesOverlap, "surgery triangle leaves the polygon");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Cut &s = p.cuts[i], &t = p.cuts[j];
            if (s.size == 0 || t.size == 0) continue;
            if (overlap({s.base0, s.base1, s.apex}, {t.base0, t.base1, t.apex}))
                throw Error(ErrorKind::TrianglesOverlap, "surgery triangles overlap");
        }
    return p;
}

namespace {

int chain_start(Mask cyc)
{
    int s = 0;
    while (!(cyc >> s & 1) || (cyc >> ((s + kCycle - 1) % kCycle) & 1)) ++s;
    return s;
}

std::string point_str(const Point& p)
{
    return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

SingularityData lone_i1(const Point& axis)
{
    SingularityData s;
    s.rays.push_back({{numerator(axis.x), numerator(axis.y)}, 1});
    s.name = "I1";
    return s;
}

void listed_exceptions(const RootSystem& rs, const AVector& a, Placement placement,
                       std::vector<std::string>& out)
{
    const Mask g = a.zero_set();
    std::set<std::string> found;
    for (const Perm& p : automorphism_group(rs).s3) {
        auto zeros = [&](const std::vector<int>& v) { return (apply_perm(p, mask_of(v)) & ~g) == 0; };
        auto eq = [&](int i, int j) { return a.a[p[i]] == a.a[p[j]]; };
        if (placement == Placement::Symmetric) {
            if (zeros({0, 1, 2, 3, 4, 5, 6}) && eq(18, 19))
                found.insert("interior I1 points over sides " + std::to_string(p[0]) + " and " +
                             std::to_string(p[6]) + " collide (A7 case)");
            if (zeros({0, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6}) && eq(21, 22))
                found.insert("interior I1 points over sides " + std::to_string(p[0]) + " and " +
                             std::to_string(p[6]) + " collide (A13 case)");
        }
        if (zeros({0, 1, 2, 3, 4, 5, 6, 7, 19}) && eq(18, 8))
            found.insert("D0 singularity on [" + std::to_string(p[0]) + ".." + std::to_string(p[7]) +
                         "," + std::to_string(p[19]) + "]");
    }
    out.insert(out.end(), found.begin(), found.end());
}

}  // namespace

SingularLocus singular_locus(const RootSystem& rs, const AVector& a, Placement placement)
{
    const SymingtonPolytope poly = symington(rs, a, placement);
    const Mask g = a.zero_set();
    SingularLocus loc;
    std::array<bool, kCycle> corner_used{};
    std::array<bool, 3> apex_used{};
    for (Mask comp : components(rs, g)) {
        Cluster c;
        c.vertices = comp;
        c.shape = oriented_shape(rs, comp);
        c.data = table_profile(c.shape).singularity;
        c.charge = charge(c.data);
        const Mask cyc = comp & kCycleMask;
        if (cyc) {
            const int s = chain_start(cyc);
            for (int k = 0; k <= popcount(cyc); ++k) corner_used[(s + k) % kCycle] = true;
            c.position = "corner " + std::to_string(s);
            c.where = poly.corners[s];
        }
        for (int k = 0; k < 3; ++k) {
            const bool meridian = comp >> (18 + k) & 1, opposite = comp >> (21 + k) & 1;
            if (!meridian && !opposite) continue;
            apex_used[k] = true;
            if (!cyc) {
                const int side = meridian ? 6 * k : (6 * k + 9) % kCycle;
                c.position = "side " + std::to_string(side);
                c.where = poly.cuts[k].apex;
            }
        }
        loc.clusters.push_back(c);
    }
    const auto& fan = build_fan();
    for (int i = 0; i < kCycle; ++i) {
        if (corner_used[i]) continue;
        Cluster c;
        c.shape = ShapeLabel{Kind::A, 0};
        c.data = lone_i1(fan.v[i]);
        c.position = "corner " + std::to_string(i);
        c.where = poly.corners[i];
        loc.clusters.push_back(c);
    }
    for (int k = 0; k < 3; ++k) {
        if (apex_used[k]) continue;
        for (const char* hemi : {"north", "south"}) {
            Cluster c;
            c.shape = ShapeLabel{Kind::A, 0};
            c.data = lone_i1(poly.cuts[k].axis);
            c.position = std::string("interior ") + std::to_string(18 + k) + " " + hemi;
            c.where = poly.cuts[k].apex;
            loc.clusters.push_back(c);
        }
    }
    for (const Cluster& c : loc.clusters) loc.total_charge += c.charge;
    if (loc.total_charge != 24)
        throw Error(ErrorKind::Inconsistent, "singular locus has charge " + std::to_string(loc.total_charge));

    listed_exceptions(rs, a, placement, loc.exceptions);
    std::map<Point, int> seen;
    for (std::size_t i = 0; i < loc.clusters.size(); ++i) {
        const Cluster& c = loc.clusters[i];
        if (c.position.find("south") != std::string::npos) continue;
        auto [it, fresh] = seen.emplace(c.where, static_cast<int>(i));
        if (!fresh)
            loc.exceptions.push_back("coincident singular points " + loc.clusters[it->second].position +
                                     " and " + c.position + " at " + point_str(c.where));
    }
    return loc;
}

std::vector<EquatorEdge> equator_divisor(const AVector& a)
{
    const auto b = a.b();
    std::vector<EquatorEdge> out;
    for (int i = 0; i < kCycle; ++i)
        if (a.a[i] != 0) out.push_back({i, i % 2 ? 1 : 2, b[i]});
    return out;
}

IASphere glue_double(const RootSystem& rs, const SymingtonPolytope& p, const AVector& a)
{
    IASphere s;
    s.a = a;
    s.polytope = p;
    s.locus = singular_locus(rs, a, p.placement);
    s.equator = equator_divisor(a);
    return s;
}

IASResult build_ias(const RootSystem& rs, const AVector& a, Placement placement)
{
    if (!in_fundamental(a)) throw Error(ErrorKind::NotInCone, "a-vector is not in the chamber");
    if (a.zero_set() == (Mask{1} << kRoots) - 1) throw Error(ErrorKind::Degenerate, "zero a-vector");
    const Rat n = norm(rs, a);
    IASResult r;
    if (n > 0) {
        r.sphere = glue_double(rs, symington(rs, a, placement), a);
        return r;
    }
    if (n < 0) throw Error(ErrorKind::NotInCone, "a-vector has negative square");
    Interval iv;
    iv.diagram = a.zero_set();
    for (Mask comp : components(rs, relevant_content(rs, iv.diagram)))
        iv.halves.push_back(shape(rs, comp).ascii());
    if (a.is_integral()) {
        Int g = 0;
        for (const Rat& x : a.a) g = gcd(g, numerator(x));
        iv.multiple = g;
    }
    r.interval = iv;
    return r;
}

Rat volume(const IASphere& b)
{
    const auto& c = b.polytope.corners;
    Rat v = lattice_area(std::vector<Point>(c.begin(), c.end()));
    for (const Cut& cut : b.polytope.cuts) v -= cut.size * cut.size;
    return 2 * v;
}

Direction parse_direction(const std::string& s)
{
    if (s == "3-12") return Direction::V3_12;
    if (s == "8-16") return Direction::V8_16;
    if (s == "2-4") return Direction::V2_4;
    if (s == "equator") return Direction::Equator;
    throw Error(ErrorKind::Usage, "unknown direction '" + s + "'");
}

Rat circumference(const RootSystem& rs, const AVector& a, Direction dir)
{
    std::vector<int> comp;
    switch (dir) {
    case Direction::V3_12: comp = lists::affine_A1_irr(); break;
    case Direction::V8_16: comp = lists::affine_E7(); break;
    case Direction::V2_4: comp = lists::affine_A1_star(); break;
    case Direction::Equator: comp = lists::affine_A17(); break;
    }
    const RootCoeffs n = null_vector_coeffs(rs, comp);
    Rat s = 0;
    for (int i = 0; i < kRoots; ++i) s += Rat(n[i]) * a.a[i];
    return s;
}

DualDecomposition dual_decomposition(const RootSystem& rs, Mask g)
{
    DualDecomposition d;
    const Mask rel = relevant_content(rs, g);
    d.type2 = definiteness(rs, rel) != DiagramClass::Elliptic;
    const Mask cyc = rel & kCycleMask;
    const auto comps = components(rs, rel);
    auto component_of = [&](int v) {
        for (Mask c : comps)
            if (c >> v & 1) return c;
        return Mask{0};
    };
    if (cyc == kCycleMask) {
        Mask c = component_of(0);
        d.slices.push_back({oriented_shape(rs, c), c, 0});
        d.marked_points = {"north pole", "south pole"};
        return d;
    }
    int f0 = 0;
    while (cyc >> f0 & 1) f0 = (f0 + kCycle - 1) % kCycle;
    int f = f0;
    do {
        int next = (f + 1) % kCycle;
        while (cyc >> next & 1) next = (next + 1) % kCycle;
        if (next == (f + 1) % kCycle) {
            ShapeLabel a0{Kind::A, 0};
            (f % 2 ? a0.left : a0.right) = Deco::Minus;
            d.slices.push_back({a0, 0, f});
        } else {
            const int first = (f + 1) % kCycle;
            const Mask c = component_of(first);
            d.slices.push_back({oriented_shape(rs, c), c, first});
        }
        f = next;
    } while (f != f0);
    for (const Slice& s : d.slices)
        d.marked_points.push_back("center of " + s.shape.ascii() + " at " + std::to_string(s.first));
    for (int k = 0; k < 3; ++k) {
        if ((g >> (18 + k) & 1) || (g >> (21 + k) & 1)) continue;
        d.marked_points.push_back("north " + std::to_string(18 + k));
        d.marked_points.push_back("south " + std::to_string(18 + k));
    }
    return d;
}

namespace {

nlohmann::json point_json(const Point& p) { return {rat_json(p.x), rat_json(p.y)}; }

}  // namespace

nlohmann::json to_json(const IASphere& b)
{
    using nlohmann::json;
    json j;
    json a = json::array();
    for (const Rat& x : b.a.a) a.push_back(rat_json(x));
    j["a"] = a;
    json bbar = json::array();
    for (const Rat& x : b.polytope.bbar) bbar.push_back(rat_json(x));
    j["bbar"] = bbar;
    j["placement"] = placement_name(b.polytope.placement);
    json corners = json::array();
    for (const Point& p : b.polytope.corners) corners.push_back(point_json(p));
    j["corners"] = corners;
    json cuts = json::array();
    for (const Cut& c : b.polytope.cuts)
        cuts.push_back({{"root", c.root},
                        {"side", c.side},
                        {"size", rat_json(c.size)},
                        {"base", {point_json(c.base0), point_json(c.base1)}},
                        {"apex", point_json(c.apex)},
                        {"axis", point_json(c.axis)}});
    j["cuts"] = cuts;
    json clusters = json::array();
    for (const Cluster& c : b.locus.clusters) {
        json e{{"charge", c.charge},
               {"position", c.position},
               {"where", point_json(c.where)},
               {"presentation", c.data.name},
               {"monodromy", conjugacy_class(monodromy(c.data))}};
        if (c.vertices) {
            e["vertices"] = vertices_of(c.vertices);
            e["shape"] = c.shape.ascii();
        }
        clusters.push_back(e);
    }
    j["clusters"] = clusters;
    j["total_charge"] = b.locus.total_charge;
    j["exceptions"] = b.locus.exceptions;
    json eq = json::array();
    for (const EquatorEdge& e : b.equator)
        eq.push_back({{"side", e.side}, {"multiplicity", e.multiplicity}, {"length", rat_json(e.length)}});
    j["equator"] = eq;
    j["volume"] = rat_json(volume(b));
    return j;
}

nlohmann::json to_json(const Interval& i)
{
    return {{"degenerate", "interval"},
            {"diagram", vertices_of(i.diagram)},
            {"halves", i.halves},
            {"multiple", rat_json(Rat(i.multiple))}};
}

std::string to_svg(const IASphere& b)
{
    const auto& poly = b.polytope;
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const Point& p : poly.corners) {
        lo_x = std::min(lo_x, p.x.convert_to<double>());
        hi_x = std::max(hi_x, p.x.convert_to<double>());
        lo_y = std::min(lo_y, p.y.convert_to<double>());
        hi_y = std::max(hi_y, p.y.convert_to<double>());
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
    const double scale = 560.0 / span, pad = 20.0;
    auto X = [&](const Point& p) { return pad + (p.x.convert_to<double>() - lo_x) * scale; };
    auto Y = [&](const Point& p) { return pad + (hi_y - p.y.convert_to<double>()) * scale; };
    auto path = [&](const std::vector<Point>& pts) {
        std::ostringstream s;
        s.precision(6);
        s << std::fixed;
        for (std::size_t i = 0; i < pts.size(); ++i) s << (i ? " L " : "M ") << X(pts[i]) << " " << Y(pts[i]);
        s << " Z";
        return s.str();
    };
    std::ostringstream o;
    o.precision(6);
    o << std::fixed;
    const double w = (hi_x - lo_x) * scale + 2 * pad, h = (hi_y - lo_y) * scale + 2 * pad;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\">\n";
    o << "<path d=\"" << path({poly.corners.begin(), poly.corners.end()})
      << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"2,2\"/>\n";
    o << "<path d=\"" << path(poly.boundary()) << "\" fill=\"#eef3fb\" stroke=\"none\"/>\n";
    for (const EquatorEdge& e : b.equator) {
        Point p = poly.corners[e.side], q = poly.corners[(e.side + 1) % kCycle];
        o << "<line x1=\"" << X(p) << "\" y1=\"" << Y(p) << "\" x2=\"" << X(q) << "\" y2=\"" << Y(q)
          << "\" stroke=\"#1f4e9c\" stroke-width=\"" << 1.5 * e.multiplicity << "\"/>\n";
    }
    for (const Cut& c : poly.cuts) {
        if (c.size == 0) continue;
        o << "<path d=\"" << path({c.base0, c.base1, c.apex})
          << "\" fill=\"#ffffff\" stroke=\"#b03030\" stroke-width=\"1\"/>\n";
        const Point a0 = c.apex - Rat(c.size / 2) * c.axis, a1 = c.apex + Rat(c.size / 2) * c.axis;
        o << "<line x1=\"" << X(a0) << "\" y1=\"" << Y(a0) << "\" x2=\"" << X(a1) << "\" y2=\"" << Y(a1)
          << "\" stroke=\"#b03030\" stroke-dasharray=\"4,3\"/>\n";
    }
    for (const Cluster& c : b.locus.clusters) {
        if (c.position.find("south") != std::string::npos) continue;
        const double cx = X(c.where), cy = Y(c.where), r = c.charge > 1 ? 6.0 : 4.0;
        o << "<text x=\"" << cx << "\" y=\"" << cy + r / 2 << "\" font-size=\"" << 3 * r
          << "\" text-anchor=\"middle\" fill=\"#202020\">*</text>\n";
        if (c.vertices)
            o << "<text x=\"" << cx + 8 << "\" y=\"" << cy - 8 << "\" font-size=\"10\">" << c.shape.ascii()
              << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace k3deg
