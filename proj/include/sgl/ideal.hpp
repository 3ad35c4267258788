// Nonzero ideals of Z and of quadratic rings of integers, with exact
// arithmetic: products, sums, intersections, prime factorization,
// principality search, strong-approximation witnesses and the c^{-1}(aR)
// representation.
#pragma once

#include "sgl/lattice.hpp"
#include "sgl/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgl {

class RingIdeal {
 public:
  RingIdeal() = default;

  static RingIdeal unit(const RingDescriptor& ring);
  static RingIdeal principal(const RingDescriptor& ring, const RingElem& g);
  static RingIdeal from_generators(const RingDescriptor& ring,
                                   const std::vector<RingElem>& gens);
  // Z only.
  static RingIdeal of_integer(const BigInt& n);
  // Quadratic only; verifies closure under multiplication by w.
  static RingIdeal from_lattice(const RingDescriptor& ring, const Lat2& lat);

  const RingDescriptor& ring() const { return ring_; }
  const BigInt& z_modulus() const { return n_; }
  const Lat2& lattice() const { return lat_; }

  BigInt norm() const;
  bool is_unit() const;
  bool contains(const RingElem& x) const;
  bool subset_of(const RingIdeal& other) const;
  std::string to_string() const;

  friend bool operator==(const RingIdeal&, const RingIdeal&) = default;

 private:
  RingDescriptor ring_;
  BigInt n_ = 1;                // Z: ideal n*Z, n > 0
  Lat2 lat_{1, 0, 1};           // quadratic: HNF basis {a, b + c*w}
};

int ideal_cmp(const RingIdeal& i, const RingIdeal& j);

RingIdeal ideal_product(const RingIdeal& i, const RingIdeal& j);
RingIdeal ideal_intersect(const RingIdeal& i, const RingIdeal& j);
RingIdeal ideal_sum(const RingIdeal& i, const RingIdeal& j);
BigInt ideal_norm(const RingIdeal& i);

// alpha * I and the preimage { x : alpha x in I }.
RingIdeal elem_mult_ideal(const RingElem& alpha, const RingIdeal& i);
RingIdeal elem_preimage_ideal(const RingElem& alpha, const RingIdeal& i);

// Smallest representative of b + I in the HNF fundamental domain.
RingElem canonical_residue(const RingElem& b, const RingIdeal& i);

// Some d with alpha * d = r (mod I), if one exists.
std::optional<RingElem> coset_solve(const RingElem& alpha, const RingElem& r,
                                    const RingIdeal& i);
// Some d in (b1 + I1) cap (b2 + I2), if the cosets meet.
std::optional<RingElem> coset_intersect_rep(const RingElem& b1, const RingIdeal& i1,
                                            const RingElem& b2, const RingIdeal& i2);

struct PrincipalityReport {
  bool principal = false;
  std::optional<RingElem> generator;
  bool exhaustive = true;  // false when the real-quadratic search box ran out
  BigInt search_bound = 0;
};
PrincipalityReport is_principal(const RingIdeal& i);

struct PrimePower {
  RingIdeal prime;
  int exponent = 0;
};
using PrimeFactorization = std::vector<PrimePower>;

PrimeFactorization factor(const RingIdeal& i);
int valuation(const RingIdeal& i, const RingIdeal& prime);
// I / J for J | I, via factorizations.
RingIdeal ideal_quotient_exact(const RingIdeal& i, const RingIdeal& j);

// Nonzero elements of I in a deterministic small-first order.
std::vector<RingElem> small_elements(const RingIdeal& i, int shells);

// x = a_k (mod M_k) for pairwise coprime moduli.
RingElem crt_solve(const std::vector<std::pair<RingIdeal, RingElem>>& congruences);

// x in I avoiding every listed proper subideal; empty iff some subideal
// equals I. Small elements are tried first, then a CRT construction over the
// prime-power conditions of the containing ideal.
std::optional<RingElem> strong_approx_witness(const RingIdeal& i,
                                              const std::vector<RingIdeal>& subideals);

struct FracRep {
  RingElem a, c;
};
// (a, c) with I = { x in R : c x in a R }, built from the prime factorization
// of I and verified exactly before returning. Throws SearchBudgetExhausted if
// the element search runs out.
FracRep fractional_representation(const RingIdeal& i);

struct FlatnessCase {
  RingIdeal i, j;
  bool extension_ok = false;    // (phi(I)S) cap phi(R) == phi(I)
  bool intersection_ok = false; // phi(I)S cap phi(J)S == phi(I cap J)S
};
struct FlatnessReport {
  bool all_ok = true;
  std::vector<FlatnessCase> cases;
};
// Embedding is the canonical one (identity, or Z into a quadratic ring).
FlatnessReport check_flatness_conditions(const RingDescriptor& from,
                                         const RingDescriptor& into,
                                         const std::vector<RingIdeal>& test_ideals);

// Ideal literal syntax: "nZ" over Z, "(g1,g2,...)" over quadratic rings.
RingIdeal parse_ideal(const RingDescriptor& ring, const std::string& text);

}  // namespace sgl
