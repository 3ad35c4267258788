// Reversibility checks, Folner-set search with exact rational certificates,
// invariant means induced from them, and the cross-checker auditing that no
// verdict pattern contradicts the amenability implication chain.
#pragma once

#include "sgl/right_ideal.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgl {

struct ReversibilityReport {
  bool holds = true;
  bool exact = true;  // false when only window evidence was available
  std::optional<std::pair<Element, Element>> witness;
  int radius = 0;
};

// (pP) cap (qP) over ball pairs; decided exactly through canonical principal
// forms where the model supports them, otherwise by window search for a
// common multiple.
ReversibilityReport check_left_reversible(const ModelPtr& model, int radius);
// (Pp) cap (Pq), via the opposite model.
ReversibilityReport check_right_reversible(const ModelPtr& model, int radius);

struct FolnerCertificate {
  std::vector<Element> set;  // F, sorted
  std::vector<Element> test_set;
  Rational epsilon;
  std::vector<std::pair<Element, Rational>> ratios;  // p -> |pF delta F| / |F|
};

struct FolnerBudget {
  int max_radius = 24;
  std::int64_t max_size = 4000;
  int improve_rounds = 40;
};

struct FolnerOutcome {
  bool found = false;
  FolnerCertificate certificate;  // valid when found
  Rational best_ratio;            // best max-ratio seen (found or not)
  std::vector<Element> best_set;
  std::string note;
};

FolnerOutcome folner_search(const ModelPtr& model, const std::vector<Element>& c,
                            const Rational& epsilon, const FolnerBudget& budget);

struct DiscreteMean {
  std::vector<std::pair<Element, Rational>> weights;  // sorted, mass exactly 1
};

DiscreteMean mean_from_folner(const FolnerCertificate& cert);

// l1 distance between the mean and its translate along p; for the uniform
// mean on F this equals |pF delta F| / |F| exactly.
Rational mean_deviation(const ModelPtr& model, const DiscreteMean& mu, const Element& p);

// |pF delta F| / |F|, the squared defect of the unit vector supported on F.
Rational vector_state_defect(const ModelPtr& model, const std::vector<Element>& f,
                             const Element& p);

// Left reversibility stands in for the existence of a character on the
// reduced algebra.
bool character_exists_proxy(const ModelPtr& model, int radius);

struct AuditCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct AuditReport {
  bool consistent = true;
  bool folner_found = false;
  Rational folner_best;
  ReversibilityReport left, right;
  std::vector<AuditCheck> checks;
};

struct AuditParams {
  int radius = 3;
  Rational epsilon = Rational(1, 10);
  FolnerBudget budget;
};

AuditReport implication_audit(const ModelPtr& model, const AuditParams& params);

}  // namespace sgl
