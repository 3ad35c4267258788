// Concrete left-cancellative monoids: free monoids, free abelian monoids,
// numerical semigroups, ax+b semigroups over Z or a quadratic ring of
// integers, and opposites of these. Elements are canonical forms, so
// structural equality is semigroup equality.
#pragma once

#include "sgl/ring.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sgl {

enum class ModelKind { FreeMonoid, FreeAbelian, Numerical, Axb, Opposite };

struct AxbElem {
  RingElem b, a;  // (b, a) with a != 0, acting as x -> b + a x

  friend bool operator==(const AxbElem&, const AxbElem&) = default;
};

// Payload per model: generator word / exponent vector / value / affine pair.
using ElementRep =
    std::variant<std::vector<std::int32_t>, std::vector<std::int64_t>,
                 std::int64_t, AxbElem>;

struct Element {
  std::uint64_t tag = 0;  // owning model, for mismatch detection
  ElementRep rep;

  friend bool operator==(const Element&, const Element&) = default;
};

bool elem_less(const Element& a, const Element& b);

struct ElemLess {
  bool operator()(const Element& a, const Element& b) const {
    return elem_less(a, b);
  }
};

struct CancellativityReport {
  bool left_ok = true;
  bool right_ok = true;
  std::optional<std::array<Element, 3>> left_witness;   // (p, x, y)
  std::optional<std::array<Element, 3>> right_witness;  // (p, x, y)
  int radius = 0;
};

class SemigroupModel;
using ModelPtr = std::shared_ptr<const SemigroupModel>;

class SemigroupModel {
 public:
  static ModelPtr free_monoid(int rank);
  static ModelPtr free_abelian(int rank);
  static ModelPtr numerical(std::vector<std::int64_t> gens);
  static ModelPtr axb(const RingDescriptor& ring);
  static ModelPtr opposite(ModelPtr inner);
  // Mini-language: "free:2", "abelian:3", "numerical:2,3", "axb:Z",
  // "axb:Q(sqrt(-5))", "op(<model>)".
  static ModelPtr parse(const std::string& spec);

  ModelKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const RingDescriptor& ring() const { return ring_; }
  const ModelPtr& inner() const { return inner_; }
  const std::vector<Element>& generators() const { return gens_; }
  std::uint64_t tag() const { return tag_; }
  const std::string& spec_string() const { return spec_; }

  Element unit() const;
  Element multiply(const Element& p, const Element& q) const;
  // Unique x with p x = y, if any (left cancellativity).
  std::optional<Element> left_divide(const Element& p, const Element& y) const;
  // Unique x with x p = y, if any; drives the opposite model.
  std::optional<Element> right_divide(const Element& p, const Element& y) const;

  // All products of at most r generators, in deterministic BFS order.
  std::vector<Element> ball(int r) const;

  CancellativityReport check_cancellativity_window(int radius) const;

  std::string elem_to_string(const Element& e) const;

  // Numerical model helpers.
  bool numerical_member(std::int64_t n) const;
  std::int64_t conductor() const { return conductor_; }
  const std::vector<std::int64_t>& numerical_gens() const { return num_gens_; }

  // Convenience constructors for elements of this model.
  Element word(std::vector<std::int32_t> w) const;
  Element exps(std::vector<std::int64_t> v) const;
  Element number(std::int64_t n) const;
  Element affine(RingElem b, RingElem a) const;
  Element wrap(Element inner_elem) const;  // for opposite models

 private:
  SemigroupModel() = default;
  void check_tag(const Element& e) const;

  ModelKind kind_ = ModelKind::FreeMonoid;
  int rank_ = 0;
  RingDescriptor ring_;
  ModelPtr inner_;
  std::vector<std::int64_t> num_gens_;
  std::vector<std::int64_t> apery_;  // minimal member per residue mod num_gens_[0]
  std::int64_t conductor_ = 0;
  std::vector<Element> gens_;
  std::uint64_t tag_ = 0;
  std::string spec_;
};

}  // namespace sgl
