// Closure enumeration of constructible right-ideal families, with generation
// traces, and the structural verdicts built on them: independence,
// quasi-lattice shape, the alternating-word intersection identity, and
// boolean difference forms for the union-closed family.
#pragma once

#include "sgl/right_ideal.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgl {

struct TraceStep {
  enum class Op { Root, LeftMult, Preimage, Intersect, Union };
  Op op = Op::Root;
  int by_gen = -1;  // generator index for LeftMult / Preimage
  int of = -1;      // operand index
  int with = -1;    // second operand index for Intersect / Union
};

std::string trace_op_name(TraceStep::Op op);

struct FamilyEntry {
  RightIdeal ideal;
  int depth = 0;
  TraceStep trace;
};

struct ConstructibleFamily {
  ModelPtr model;
  bool union_closed = false;
  int depth_bound = 0;
  bool complete = false;
  std::vector<FamilyEntry> entries;  // deterministic insertion order
  std::map<RightIdeal, int, RiLess> index;

  const RightIdeal& at(int i) const { return entries[i].ideal; }
  std::optional<int> find(const RightIdeal& x) const;
};

ConstructibleFamily compute_family(const ModelPtr& model, int depth,
                                   bool union_closed);

struct IndependenceResult {
  bool pass = true;
  std::optional<int> witness;  // covered ideal, family index
  std::vector<int> covers;     // irredundant proper subideals whose union is it
};
IndependenceResult check_independence(const ConstructibleFamily& family);

struct QuasiLatticeResult {
  bool pass = true;
  std::optional<int> witness;  // first non-principal nonempty ideal
  bool certain = true;
};
QuasiLatticeResult check_quasi_lattice(const ConstructibleFamily& family);

// Window comparison of q1^{-1}p1...qm^{-1}pm pm^{-1}qm...p1^{-1}q1 X against
// (q1^{-1}p1...qm^{-1}pm P) cap X.
bool verify_qpint(const ModelPtr& model, const RightIdeal& X,
                  const std::vector<std::pair<Element, Element>>& qp,
                  int window_radius);

// (X, Y) with Y inside X and (cap F') \ (cup (F\F')) = X \ Y, built by the
// product-of-projections induction and verified pointwise on a window.
std::pair<RightIdeal, RightIdeal> boolean_difference_form(
    const ConstructibleFamily& family, const std::vector<int>& f,
    const std::vector<int>& f_prime, int window_radius);

}  // namespace sgl
