#include "k3deg/numeric.hpp"

#include <algorithm>
#include <utility>

namespace k3deg {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Construction: return "Construction";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::UnknownShape: return "UnknownShape";
    case ErrorKind::Unclassifiable: return "Unclassifiable";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::TrianglesOverlap: return "TrianglesOverlap";
    case ErrorKind::ZeroVolume: return "ZeroVolume";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::OddMultiple: return "OddMultiple";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

Int gcd(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

std::string to_string(const Rat& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rref rref(RatMat m)
{
    Rref out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    out.m = std::move(m);
    return out;
}

int rank(const RatMat& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

std::vector<RatVec> kernel(const RatMat& m)
{
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    Rref rr = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec solve_unique(const RatMat& A, const RatVec& b)
{
    const std::size_t cols = A.empty() ? 0 : A[0].size();
    RatMat aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Rref rr = rref(aug);
    for (int c : rr.pivots)
        if (static_cast<std::size_t>(c) == cols)
            throw Error(ErrorKind::Inconsistent, "linear system has no solution");
    if (rr.pivots.size() < cols)
        throw Error(ErrorKind::Underdetermined, "linear system has no unique solution");
    RatVec x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[rr.pivots[i]] = rr.m[i][cols];
    return x;
}

IntVec smith_invariants(IntMat m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        while (true) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return [&] {
                IntVec d;
                for (std::size_t k = 0; k < t; ++k) d.push_back(abs(m[k][k]));
                return d;
            }();
            std::swap(m[pr], m[t]);
            for (auto& row : m) std::swap(row[pc], row[t]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Int q = m[i][t] / m[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Int q = m[t][j] / m[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold any offending row into row t and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    IntVec d;
    for (std::size_t k = 0; k < t; ++k)
        if (m[k][k] != 0) d.push_back(abs(m[k][k]));
    return d;
}

IntVec primitive_integer(const RatVec& v)
{
    Int l = 1;
    for (const auto& x : v) {
        const Int& den = denominator(x);
        l = l / gcd(l, den) * den;
    }
    IntVec out;
    Int g = 0;
    for (const auto& x : v) {
        Int y = numerator(x) * (l / denominator(x));
        g = gcd(g, y);
        out.push_back(std::move(y));
    }
    if (g == 0) return out;
    int sign = 1;
    for (const auto& x : out)
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    for (auto& x : out) x = x / g * sign;
    return out;
}

}  // namespace k3deg
