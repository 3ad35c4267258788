// Constructible right ideals in canonical form, one form family per model:
//   free / abelian : empty or principal,
//   numerical      : empty or sporadic-plus-tail,
//   ax+b           : empty or (b + I) x I^reg,
// plus finite unions of these atoms (antichains) for the union-closed family.
// Canonical forms are unique per subset, so structural equality is set
// equality and every verdict built on it is exact.
#pragma once

#include "sgl/ideal.hpp"
#include "sgl/semigroup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sgl {

struct EmptyIdeal {
  friend bool operator==(const EmptyIdeal&, const EmptyIdeal&) { return true; }
};

struct PrincipalIdeal {
  Element p;  // p P

  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;
};

struct CosetIdeal {
  RingElem b;      // canonical residue mod ideal
  RingIdeal ideal;  // (b + I) x I^reg

  friend bool operator==(const CosetIdeal&, const CosetIdeal&) = default;
};

struct TailIdeal {
  std::vector<std::int64_t> sporadic;  // members below threshold, sorted
  std::int64_t threshold = 0;          // minimal t with [t, oo) contained

  friend bool operator==(const TailIdeal&, const TailIdeal&) = default;
};

struct RightIdeal;

struct UnionIdeal {
  std::vector<RightIdeal> atoms;  // non-union atoms, sorted antichain

  friend bool operator==(const UnionIdeal&, const UnionIdeal&);
};

struct RightIdeal {
  std::uint64_t tag = 0;
  std::variant<EmptyIdeal, PrincipalIdeal, CosetIdeal, TailIdeal, UnionIdeal> v;

  bool is_empty() const { return std::holds_alternative<EmptyIdeal>(v); }
  bool is_union() const { return std::holds_alternative<UnionIdeal>(v); }

  friend bool operator==(const RightIdeal&, const RightIdeal&);
};

bool ri_less(const RightIdeal& a, const RightIdeal& b);

struct RiLess {
  bool operator()(const RightIdeal& a, const RightIdeal& b) const {
    return ri_less(a, b);
  }
};

RightIdeal ri_empty(const ModelPtr& m);
RightIdeal ri_full(const ModelPtr& m);  // P itself, canonicalized
// p P in canonical form (tail form for numerical, coset form for ax+b).
RightIdeal ri_principal(const ModelPtr& m, const Element& p);
RightIdeal ri_coset(const ModelPtr& m, const RingElem& b, const RingIdeal& ideal);
RightIdeal ri_tail(const ModelPtr& m, std::vector<std::int64_t> sporadic,
                   std::int64_t threshold);

bool ri_membership(const ModelPtr& m, const Element& x, const RightIdeal& X);
RightIdeal left_mult_ideal(const ModelPtr& m, const Element& p, const RightIdeal& X);
RightIdeal preimage_ideal(const ModelPtr& m, const Element& p, const RightIdeal& X);
RightIdeal intersect_ideals(const ModelPtr& m, const RightIdeal& X, const RightIdeal& Y);
RightIdeal union_ideals(const ModelPtr& m, const RightIdeal& X, const RightIdeal& Y);

// Exact subset decision; for coset atoms against unions this constructs a
// strong-approximation witness rather than assuming independence.
bool ri_subset(const ModelPtr& m, const RightIdeal& X, const RightIdeal& Y);

struct RiPrincipality {
  bool principal = false;
  std::optional<Element> generator;
  bool certain = true;  // false only for inconclusive real-quadratic searches
};
RiPrincipality ri_principal_check(const ModelPtr& m, const RightIdeal& X);

std::string ri_to_string(const ModelPtr& m, const RightIdeal& X);

// q1^{-1} p1 ... qm^{-1} pm P for the alternating word [(q1,p1),...,(qm,pm)].
RightIdeal ideal_of_word(const ModelPtr& m,
                         const std::vector<std::pair<Element, Element>>& qp);

// Membership in the word form, evaluated by alternating multiply/divide
// without normalizing the ideal first.
bool word_membership(const ModelPtr& m, const Element& x,
                     const std::vector<std::pair<Element, Element>>& qp);

}  // namespace sgl
