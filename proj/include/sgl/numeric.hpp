// Exact arbitrary-precision integers and rationals used throughout the
// toolkit. No floating point is used anywhere in the core modules.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C++ '/' truncates toward zero; the lattice reductions need floor semantics.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
  return a - floor_div(a, b) * b;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// g = gcd(a,b) = s*a + t*b, g >= 0.
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, cs = 0;
  BigInt old_t = 0, ct = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cs;
    old_s = cs;
    cs = tmp;
    tmp = old_t - q * ct;
    old_t = ct;
    ct = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

inline BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline std::int64_t to_int64(const BigInt& n) {
  return n.convert_to<std::int64_t>();
}

struct SearchBudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sgl
