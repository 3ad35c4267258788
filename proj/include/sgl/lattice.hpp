// Full-rank sublattices of Z^2 in Hermite normal form, plus the small exact
// integer linear algebra (column HNF, solve, kernel) backing the ideal
// arithmetic.
#pragma once

#include "sgl/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sgl {

// Basis {(a,0), (b,c)} with a > 0, c > 0, 0 <= b < a.
struct Lat2 {
  BigInt a, b, c;

  friend bool operator==(const Lat2& l, const Lat2& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
};

// HNF of the lattice spanned by the given vectors; throws if rank < 2.
Lat2 lat_from_generators(const std::vector<std::pair<BigInt, BigInt>>& gens);

bool lat_contains(const Lat2& l, const BigInt& x, const BigInt& y);
bool lat_subset(const Lat2& inner, const Lat2& outer);
Lat2 lat_intersect(const Lat2& l1, const Lat2& l2);
inline BigInt lat_det(const Lat2& l) { return l.a * l.c; }

// x = r1 mod m1, x = r2 mod m2; empty if incompatible. Result in [0, lcm).
std::optional<BigInt> crt_int(const BigInt& r1, const BigInt& m1,
                              const BigInt& r2, const BigInt& m2);

using IntMat = std::vector<std::vector<BigInt>>;  // row-major, small and dense

// Some integer solution w of A w = t, if one exists.
std::optional<std::vector<BigInt>> int_solve(const IntMat& a,
                                             const std::vector<BigInt>& t);

// Basis of { w : A w = 0 }.
std::vector<std::vector<BigInt>> int_kernel(const IntMat& a);

}  // namespace sgl
