// Exact integer/rational types and small dense linear algebra over them.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3deg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

enum class ErrorKind {
    Construction,
    NotAffine,
    Underdetermined,
    Inconsistent,
    NotInImage,
    NotInCone,
    NotPrimitive,
    UnknownShape,
    Unclassifiable,
    NotClosed,
    TrianglesOverlap,
    ZeroVolume,
    ParityViolation,
    Degenerate,
    OddMultiple,
    Usage,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct Rref {
    RatMat m;
    std::vector<int> pivots;  // pivot column of each nonzero row
};

Rref rref(RatMat m);
int rank(const RatMat& m);
std::vector<RatVec> kernel(const RatMat& m);

// Unique solution of A x = b; throws Underdetermined or Inconsistent.
RatVec solve_unique(const RatMat& A, const RatVec& b);

// Nonzero invariant factors (positive, each dividing the next).
IntVec smith_invariants(IntMat m);

// Scale a rational vector to a primitive integer vector whose first nonzero
// entry is positive.
IntVec primitive_integer(const RatVec& v);

Int gcd(Int a, Int b);
std::string to_string(const Rat& r);

template <class T>
RatMat to_rat(const std::vector<std::vector<T>>& m)
{
    RatMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) out[i].push_back(Rat(x));
    return out;
}

}  // namespace k3deg
