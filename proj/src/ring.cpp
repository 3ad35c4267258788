#include "sgl/ring.hpp"

#include <cctype>
#include <stdexcept>

namespace sgl {

namespace {

bool squarefree(std::int64_t d) {
  if (d < 0) d = -d;
  for (std::int64_t f = 2; f * f <= d; ++f)
    if (d % (f * f) == 0) return false;
  return true;
}

}  // namespace

RingDescriptor RingDescriptor::quadratic(std::int64_t d) {
  if (d == 0 || d == 1 || !squarefree(d))
    throw std::invalid_argument("quadratic ring needs squarefree d != 0, 1");
  RingDescriptor r;
  r.kind = RingKind::Quadratic;
  r.d = d;
  return r;
}

RingDescriptor RingDescriptor::parse(const std::string& text) {
  if (text == "Z") return integers();
  // "Q(sqrt(<int>))"
  const std::string pre = "Q(sqrt(";
  if (text.rfind(pre, 0) == 0 && text.size() > pre.size() + 1 &&
      text.substr(text.size() - 2) == "))") {
    std::string body = text.substr(pre.size(), text.size() - pre.size() - 2);
    return quadratic(std::stoll(body));
  }
  throw std::invalid_argument("cannot parse ring descriptor: " + text);
}

std::string RingDescriptor::to_string() const {
  if (is_z()) return "Z";
  return "Q(sqrt(" + std::to_string(d) + "))";
}

int re_cmp(const RingElem& a, const RingElem& b) {
  if (a.x != b.x) return a.x < b.x ? -1 : 1;
  if (a.y != b.y) return a.y < b.y ? -1 : 1;
  return 0;
}

RingElem re_add(const RingElem& a, const RingElem& b) {
  return {a.x + b.x, a.y + b.y};
}

RingElem re_sub(const RingElem& a, const RingElem& b) {
  return {a.x - b.x, a.y - b.y};
}

RingElem re_neg(const RingElem& a) { return {-a.x, -a.y}; }

RingElem re_mul(const RingDescriptor& ring, const RingElem& a, const RingElem& b) {
  if (ring.is_z()) return {a.x * b.x, 0};
  BigInt t = ring.omega_trace(), n = ring.omega_norm();
  // w^2 = T w - N
  return {a.x * b.x - n * (a.y * b.y), a.x * b.y + a.y * b.x + t * (a.y * b.y)};
}

RingElem re_conj(const RingDescriptor& ring, const RingElem& a) {
  if (ring.is_z()) return a;
  return {a.x + ring.omega_trace() * a.y, -a.y};
}

BigInt re_norm(const RingDescriptor& ring, const RingElem& a) {
  if (ring.is_z()) return a.x;
  BigInt t = ring.omega_trace(), n = ring.omega_norm();
  return a.x * a.x + t * a.x * a.y + n * a.y * a.y;
}

std::optional<RingElem> re_div(const RingDescriptor& ring, const RingElem& a,
                               const RingElem& b) {
  if (b.is_zero()) return std::nullopt;
  if (ring.is_z()) {
    if (a.x % b.x != 0) return std::nullopt;
    return RingElem{a.x / b.x, 0};
  }
  RingElem num = re_mul(ring, a, re_conj(ring, b));
  BigInt den = re_norm(ring, b);
  if (num.x % den != 0 || num.y % den != 0) return std::nullopt;
  return RingElem{num.x / den, num.y / den};
}

std::string re_to_string(const RingDescriptor& ring, const RingElem& a) {
  if (ring.is_z() || a.y == 0) return a.x.str();
  std::string w = a.y == 1 ? "w" : (a.y == -1 ? "-w" : a.y.str() + "w");
  if (a.x == 0) return w;
  return a.x.str() + (a.y > 0 ? "+" : "") + w;
}

RingElem re_parse(const RingDescriptor& ring, const std::string& text) {
  // Signed terms of the form <int>, w, <int>w.
  RingElem out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty ring element");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    BigInt sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("cannot parse ring element: " + text);
    }
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      digits += text[i++];
    skip_ws();
    bool has_w = i < text.size() && (text[i] == 'w' || text[i] == 'W');
    if (has_w) ++i;
    if (digits.empty() && !has_w)
      throw std::invalid_argument("cannot parse ring element: " + text);
    BigInt coef = digits.empty() ? BigInt(1) : BigInt(digits);
    if (has_w) {
      if (ring.is_z()) throw std::invalid_argument("'w' is not an integer");
      out.y += sign * coef;
    } else {
      out.x += sign * coef;
    }
    first = false;
  }
  return out;
}

FieldElem fe_from(const RingElem& a) {
  return {Rational(a.x), Rational(a.y)};
}

FieldElem fe_add(const FieldElem& a, const FieldElem& b) {
  return {a.x + b.x, a.y + b.y};
}

FieldElem fe_sub(const FieldElem& a, const FieldElem& b) {
  return {a.x - b.x, a.y - b.y};
}

FieldElem fe_mul(const RingDescriptor& ring, const FieldElem& a, const FieldElem& b) {
  if (ring.is_z()) return {a.x * b.x, 0};
  Rational t(ring.omega_trace()), n(ring.omega_norm());
  return {a.x * b.x - n * a.y * b.y, a.x * b.y + a.y * b.x + t * a.y * b.y};
}

FieldElem fe_inv(const RingDescriptor& ring, const FieldElem& a) {
  if (a.is_zero()) throw std::invalid_argument("division by zero");
  if (ring.is_z()) return {Rational(1) / a.x, 0};
  Rational t(ring.omega_trace()), n(ring.omega_norm());
  FieldElem conj{a.x + t * a.y, -a.y};
  Rational nm = a.x * a.x + t * a.x * a.y + n * a.y * a.y;
  return {conj.x / nm, conj.y / nm};
}

}  // namespace sgl
