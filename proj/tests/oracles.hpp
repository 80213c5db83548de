// Small independent checks used as test oracles: exact determinants and
// definiteness of integer matrices, written without the library's algebra.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<BigInt>>;

// Leading principal minors by Bareiss elimination without pivoting; returns
// false when a zero pivot makes them unavailable.
inline bool leading_minors(Matrix m, std::vector<BigInt>& minors)
{
    const std::size_t n = m.size();
    minors.clear();
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m[k][k]);
        if (m[k][k] == 0) return k + 1 == n;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return true;
}

// Sylvester's criterion.
inline bool positive_definite(const Matrix& m)
{
    std::vector<BigInt> minors;
    if (!leading_minors(m, minors)) return false;
    for (const auto& d : minors)
        if (d <= 0) return false;
    return true;
}

inline BigInt determinant(const Matrix& m)
{
    std::vector<BigInt> minors;
    if (m.empty()) return 1;
    if (!leading_minors(m, minors)) {
        // Fall back to cofactor expansion for the rare singular-pivot case.
        if (m.size() == 1) return m[0][0];
        BigInt d = 0;
        for (std::size_t c = 0; c < m.size(); ++c) {
            Matrix sub;
            for (std::size_t i = 1; i < m.size(); ++i) {
                std::vector<BigInt> row;
                for (std::size_t j = 0; j < m.size(); ++j)
                    if (j != c) row.push_back(m[i][j]);
                sub.push_back(row);
            }
            d += (c % 2 ? -1 : 1) * m[0][c] * determinant(sub);
        }
        return d;
    }
    return minors.back();
}

// Rank by fraction-free elimination with row pivoting.
inline int rank(Matrix m)
{
    int r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt f = m[i][c], g = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
        }
        ++r;
    }
    return r;
}

}  // namespace oracle
