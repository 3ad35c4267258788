// Z and quadratic rings of integers. Elements are stored as integer
// coordinates with respect to the integral basis {1, w}, where w = sqrt(d)
// for d = 2, 3 mod 4 and w = (1 + sqrt(d))/2 for d = 1 mod 4.
#pragma once

#include "sgl/numeric.hpp"

#include <compare>
#include <optional>
#include <string>

namespace sgl {

enum class RingKind { IntegersZ, Quadratic };

struct RingDescriptor {
  RingKind kind = RingKind::IntegersZ;
  std::int64_t d = 0;  // squarefree, not 0 or 1

  static RingDescriptor integers() { return {}; }
  static RingDescriptor quadratic(std::int64_t d);
  static RingDescriptor parse(const std::string& text);

  bool is_z() const { return kind == RingKind::IntegersZ; }
  bool omega_half() const { return ((d % 4) + 4) % 4 == 1; }

  // Minimal polynomial of w is x^2 - T x + N.
  BigInt omega_trace() const { return omega_half() ? 1 : 0; }
  BigInt omega_norm() const {
    return omega_half() ? BigInt(1 - d) / 4 : BigInt(-d);
  }
  BigInt discriminant() const { return omega_half() ? BigInt(d) : BigInt(4 * d); }

  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

// x + y*w; y stays 0 over Z.
struct RingElem {
  BigInt x, y;

  RingElem() : x(0), y(0) {}
  RingElem(BigInt x0, BigInt y0) : x(std::move(x0)), y(std::move(y0)) {}
  explicit RingElem(long v) : x(v), y(0) {}

  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const RingElem&, const RingElem&) = default;
};

int re_cmp(const RingElem& a, const RingElem& b);

RingElem re_add(const RingElem& a, const RingElem& b);
RingElem re_sub(const RingElem& a, const RingElem& b);
RingElem re_neg(const RingElem& a);
RingElem re_mul(const RingDescriptor& ring, const RingElem& a, const RingElem& b);
RingElem re_conj(const RingDescriptor& ring, const RingElem& a);
BigInt re_norm(const RingDescriptor& ring, const RingElem& a);
// Exact division in the ring; empty if b does not divide a.
std::optional<RingElem> re_div(const RingDescriptor& ring, const RingElem& a,
                               const RingElem& b);
std::string re_to_string(const RingDescriptor& ring, const RingElem& a);
RingElem re_parse(const RingDescriptor& ring, const std::string& text);

// Elements of the fraction field, used for group-level normal forms.
struct FieldElem {
  Rational x, y;

  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

FieldElem fe_from(const RingElem& a);
FieldElem fe_add(const FieldElem& a, const FieldElem& b);
FieldElem fe_sub(const FieldElem& a, const FieldElem& b);
FieldElem fe_mul(const RingDescriptor& ring, const FieldElem& a, const FieldElem& b);
FieldElem fe_inv(const RingDescriptor& ring, const FieldElem& a);

}  // namespace sgl
