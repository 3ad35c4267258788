// Finite truncations of the left regular representation: partial-permutation
// matrices for the shift isometries, diagonal projections for right ideals,
// alternating-word evaluation with exact boundary bookkeeping, and the
// relation suites verified entrywise on interior columns.
#pragma once

#include "sgl/family.hpp"
#include "sgl/right_ideal.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgl {

struct OperatorMatrix {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major

  OperatorMatrix() = default;
  explicit OperatorMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

OperatorMatrix mat_identity(int n);
OperatorMatrix mat_mul(const OperatorMatrix& x, const OperatorMatrix& y);
OperatorMatrix mat_add(const OperatorMatrix& x, const OperatorMatrix& y);
OperatorMatrix mat_sub(const OperatorMatrix& x, const OperatorMatrix& y);
OperatorMatrix mat_transpose(const OperatorMatrix& x);
OperatorMatrix mat_diagonal(const OperatorMatrix& x);
bool mat_is_zero(const OperatorMatrix& x);

struct TruncatedRepresentation {
  ModelPtr model;
  int radius = 0;
  std::vector<Element> window;  // ball order
  std::map<Element, int, ElemLess> index;
  std::vector<Element> test_elements;       // ball(test_radius)
  std::vector<std::vector<char>> interior;  // interior[k], k = 0..depth
  int interior_depth = 0;

  std::optional<int> find(const Element& x) const;
  bool in_interior(int k, int col) const { return interior[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] != 0; }
};

TruncatedRepresentation build_truncation(const ModelPtr& model, int radius,
                                         int interior_depth = 6, int test_radius = 2);

struct VMatrix {
  OperatorMatrix m;
  std::vector<char> defective;  // columns whose image left the window
};

VMatrix matrix_V(const TruncatedRepresentation& rep, const Element& p);
OperatorMatrix matrix_E(const TruncatedRepresentation& rep, const RightIdeal& x);

// V_{p1}^* V_{q1} ... V_{pm}^* V_{qm} with per-column exactness: a column is
// valid iff every intermediate stayed inside the window (a division that
// fails globally yields an exact zero column and stays valid).
struct MaskedMatrix {
  OperatorMatrix m;
  std::vector<char> valid;
};

using OpWord = std::vector<std::pair<Element, Element>>;  // (p_i, q_i)

MaskedMatrix evaluate_word(const TruncatedRepresentation& rep, const OpWord& word);

OperatorMatrix conditional_expectation(const TruncatedRepresentation& rep,
                                       const OperatorMatrix& t);

// Per-model group normal forms behind the word-product relation.
struct GroupElem {
  std::variant<std::vector<std::int32_t>,  // reduced free-group word
               std::vector<std::int64_t>,  // Z^k
               std::int64_t,               // Z
               std::pair<FieldElem, FieldElem>>  // ax+b over the fraction field
      rep;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

class GroupEval {
 public:
  explicit GroupEval(ModelPtr model);
  GroupElem identity() const;
  GroupElem of(const Element& e) const;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inv(const GroupElem& a) const;
  bool is_identity(const GroupElem& a) const;
  // p1^{-1} q1 ... pm^{-1} qm
  GroupElem word_product(const OpWord& word) const;

 private:
  ModelPtr model_;
};

struct RelationFailure {
  std::string relation;
  std::string detail;
};

struct RelationReport {
  std::uint64_t seed = 0;
  std::map<std::string, std::int64_t> checked;  // relation -> comparisons
  std::vector<RelationFailure> failures;
  bool all_ok() const { return failures.empty(); }
};

struct SampleConfig {
  int pair_radius = 2;
  int random_words = 50;
  int max_word_len = 3;
  std::uint64_t seed = 0;
};

// I.(i), I.(ii), II.(i)-(iii), the union relation, and the adjoint-conjugation
// identity, checked entrywise against the ideal engine.
RelationReport verify_relations(const TruncatedRepresentation& rep,
                                const ConstructibleFamily& family,
                                const SampleConfig& cfg);

struct WordCheck {
  OpWord word;
  bool group_identity = false;
  bool ok = false;
  std::string detail;
};

// Word-product relation: words multiplying to e evaluate to the projection
// onto the independently computed ideal; all others have zero diagonal.
WordCheck verify_word_product_relation(const TruncatedRepresentation& rep,
                                       const OpWord& word);

// Diagonal extraction lands in the span of the ideal projections.
WordCheck verify_diagonal_extraction(const TruncatedRepresentation& rep,
                                     const OpWord& word);

// <M xi, xi> for xi the normalized indicator of F, as an exact rational, and
// the combinatorial count it must equal.
Rational state_average_matrix(const TruncatedRepresentation& rep,
                              const MaskedMatrix& m, const std::vector<int>& f_cols);
Rational state_average_combinatorial(const TruncatedRepresentation& rep,
                                     const OpWord& word, const std::vector<int>& f_cols);

// ||V_p xi - xi||^2 computed by matrix arithmetic; exact when p maps F inside
// the window.
Rational vector_state_norm_sq(const TruncatedRepresentation& rep, const Element& p,
                              const std::vector<int>& f_cols);

// Dense integer text dump: a window-ordering header followed by one row per
// line, row-major.
void dump_matrix(const TruncatedRepresentation& rep, const std::string& name,
                 const OperatorMatrix& m, std::ostream& os);

}  // namespace sgl
