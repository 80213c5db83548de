#include "k3deg/sl2.hpp"

#include <algorithm>
#include <array>

namespace k3deg {

SL2 SL2::pow(long long n) const
{
    SL2 base = n < 0 ? inverse() : *this;
    unsigned long long e = n < 0 ? -static_cast<unsigned long long>(n) : n;
    SL2 out;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::string SL2::str() const
{
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

namespace kodaira {
SL2 II() { return {1, 1, -1, 0}; }
SL2 III() { return {0, 1, -1, 0}; }
SL2 IV() { return {0, 1, -1, -1}; }
SL2 II_star() { return -IV(); }
SL2 III_star() { return -III(); }
SL2 IV_star() { return -II(); }
}  // namespace kodaira

SL2 shear_matrix(const Vec2& v)
{
    const auto& [p, q] = v;
    if (gcd(p, q) != 1) throw Error(ErrorKind::NotPrimitive, "shear direction must be primitive");
    return {1 + p * q, q * q, -p * p, 1 - p * q};
}

Vec2 act(const Vec2& v, const SL2& m)
{
    return {v.first * m.a + v.second * m.c, v.first * m.b + v.second * m.d};
}

SingularityData SingularityData::I(const std::vector<int>& n)
{
    const Vec2 u{1, 0}, v{0, 1};
    std::vector<Vec2> dirs;
    switch (n.size()) {
    case 1: dirs = {u}; break;
    case 2: dirs = {u, v}; break;
    case 3: dirs = {u, v, {-1, -1}}; break;
    case 4: dirs = {u, v, {-1, 0}, {0, -1}}; break;
    default: throw Error(ErrorKind::Usage, "I(...) takes one to four multiplicities");
    }
    SingularityData s;
    s.name = "I(";
    for (std::size_t i = 0; i < n.size(); ++i) {
        s.name += (i ? "," : "") + std::to_string(n[i]);
        if (n[i] < 0) throw Error(ErrorKind::Usage, "negative multiplicity");
        if (n[i] > 0) s.rays.push_back({dirs[i], n[i]});
    }
    s.name += ")";
    return s;
}

SL2 monodromy(const SingularityData& s)
{
    SL2 m;
    for (const auto& [v, k] : s.rays) m = m * shear_matrix(v).pow(k);
    return m;
}

int charge(const SingularityData& s)
{
    int q = 0;
    for (const auto& r : s.rays) q += r.second;
    return q;
}

namespace {

Int weight(const SL2& m)
{
    return abs(m.a) + abs(m.b) + abs(m.c) + abs(m.d);
}

bool nonnegative(const SL2& m)
{
    return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0;
}

SL2 conj(const SL2& g, const SL2& m)
{
    return g * m * g.inverse();
}

// A conjugate with nonnegative entries of a matrix with trace > 2.
SL2 positive_conjugate(SL2 m)
{
    const std::array<SL2, 5> gens{SL2::L(), SL2::L().inverse(), SL2::R(), SL2::R().inverse(),
                                  SL2{0, 1, -1, 0}};
    while (!nonnegative(m)) {
        SL2 best = m;
        for (const auto& g : gens) {
            SL2 c = conj(g, m);
            if (nonnegative(c)) return c;
            if (weight(c) < weight(best)) best = c;
        }
        if (best == m) {
            // Plateau: a rotation by S moves sign patterns without changing weight.
            SL2 s = conj(gens[4], m);
            bool improved = false;
            for (const auto& g : gens) {
                SL2 c = conj(g, s);
                if (nonnegative(c)) return c;
                if (weight(c) < weight(m)) {
                    best = c;
                    improved = true;
                }
            }
            if (!improved) throw Error(ErrorKind::Degenerate, "conjugacy reduction stalled at " + m.str());
        }
        m = best;
    }
    return m;
}

std::string rl_word(SL2 m)
{
    std::string w;
    while (!(m == SL2::identity())) {
        if (m.a >= m.c && m.b >= m.d) {
            w += 'L';
            m = SL2{m.a - m.c, m.b - m.d, m.c, m.d};
        } else if (m.c >= m.a && m.d >= m.b) {
            w += 'R';
            m = SL2{m.a, m.b, m.c - m.a, m.d - m.b};
        } else {
            throw Error(ErrorKind::Degenerate, "matrix is not a positive word");
        }
    }
    // Least rotation with R ordered before L.
    std::string best;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::string r = w.substr(i) + w.substr(0, i);
        auto key = [](std::string s) {
            for (auto& ch : s) ch = ch == 'R' ? '0' : '1';
            return s;
        };
        if (best.empty() || key(r) < key(best)) best = r;
    }
    return best;
}

std::string parabolic_class(const SL2& m)
{
    // m = I + k * [[pq, q^2], [-p^2, -pq]] with gcd(p, q) = 1.
    const Int nb = m.b, nc = m.c;
    Int k = gcd(gcd(m.a - 1, nb), gcd(nc, m.d - 1));
    const int sign = nb != 0 ? (nb > 0 ? 1 : -1) : (nc < 0 ? 1 : -1);
    return (sign > 0 ? "L^" : "R^") + k.str();
}

}  // namespace

std::string conjugacy_class(const SL2& m)
{
    if (m.det() != 1) throw Error(ErrorKind::Usage, "matrix is not in SL2(Z)");
    if (m == SL2::identity()) return "Id";
    if (m == -SL2::identity()) return "-Id";
    const Int t = m.trace();
    if (t == 0) return m.b > 0 ? "Kodaira:III" : "Kodaira:III*";
    if (t == 1) return m.b > 0 ? "Kodaira:II" : "Kodaira:II*";
    if (t == -1) return m.b > 0 ? "Kodaira:IV" : "Kodaira:IV*";
    if (t == 2) return parabolic_class(m);
    if (t == -2) return "-" + parabolic_class(-m);
    if (t > 2) return "word:" + rl_word(positive_conjugate(m));
    return "-word:" + rl_word(positive_conjugate(-m));
}

namespace {

DivisorRay ray(long long x, long long y)
{
    Int g = gcd(Int(x), Int(y));
    return {{Int(x) / g, Int(y) / g}, static_cast<int>(g)};
}

}  // namespace

TableProfile table_profile(const ShapeLabel& s)
{
    using SD = SingularityData;
    const int n = s.n;
    TableProfile t;
    switch (s.kind) {
    case Kind::A: {
        const bool lp = s.left == Deco::Prime, rp = s.right == Deco::Prime;
        if (lp && rp) {
            const int k = (n + 1) / 2;
            t = {SD::I({k, 1, k, 1}), {ray(0, 1), ray(0, -1)}};
        } else if (lp || rp) {
            if (n == 2)
                t = {SD::I({1, 1, 1, 1}), {ray(-1, 1), ray(1, -1)}};
            else
                t = {SD::I({n - 1, 1, 1, 1}), {ray(1, 1), ray(-2, n - 3)}};
        } else if (s.left == Deco::Minus) {
            t = {SD::I({n + 1}), {ray(2, -1), ray(-2, -n)}};
        } else {
            t = {SD::I({n + 1}), {ray(2, 0), ray(-2, -n - 1)}};
        }
        break;
    }
    case Kind::D:
        if (s.right == Deco::Prime)
            t = {SD::I({n - 2, 1, 3, 1}), {ray(2, 0), ray(-1, 0)}};
        else if (s.right == Deco::Minus)
            t = {SD::I({n - 2, 1, 2, 1}), {ray(2, 0), ray(-1, 1)}};
        else
            t = {SD::I({n - 2, 1, 2, 1}), {ray(2, 0), ray(-2, 0)}};
        break;
    case Kind::E:
        t.singularity = SD::I({n - 3, 1, 3, 1});
        if (n == 6) t.divisor = {ray(0, 1), ray(0, -1)};
        else if (n == 7) t.divisor = {ray(2, 0), ray(-1, 0)};
        else t.divisor = {ray(1, 0), ray(-1, 0)};
        break;
    case Kind::IrrA1: t = {SD::I({1, 0, 1, 0}), {ray(2, 0), ray(-2, 0)}}; break;
    case Kind::IrrDownA1: t = {SD::I({1, 0, 1, 0}), {ray(1, 0), ray(-1, 0)}}; break;
    default:
        throw Error(ErrorKind::UnknownShape, "no singularity profile for " + s.ascii());
    }
    t.singularity.name = s.ascii() + " " + t.singularity.name;
    return t;
}

SingularityData table2_presentation(const ShapeLabel& s)
{
    using SD = SingularityData;
    const int n = s.n;
    switch (s.kind) {
    case Kind::A: {
        const bool lp = s.left == Deco::Prime, rp = s.right == Deco::Prime;
        if (lp && rp) {
            const int k = (n + 1) / 2;
            return SD::I({k, k, 2});
        }
        if (lp || rp) return SD::I({n + 1, 1});
        return SD::I({n + 1});
    }
    case Kind::D:
        if (s.right == Deco::Prime) return SD::I({2, 3, n - 2});
        return SD::I({2, 2, n - 2});
    case Kind::E: return SD::I({2, 3, n - 3});
    case Kind::IrrA1:
    case Kind::IrrDownA1: return SD::I({1, 0, 1, 0});
    default:
        throw Error(ErrorKind::UnknownShape, "no monodromy row for " + s.ascii());
    }
}

}  // namespace k3deg
