// Stable JSON views of the toolkit's values. Key order is fixed and exact
// rationals are serialized as numerator/denominator strings, so identical
// configurations produce byte-identical output.
#pragma once

#include "sgl/amenability.hpp"
#include "sgl/family.hpp"
#include "sgl/operator_model.hpp"

#include <json.hpp>

namespace sgl {

using Json = nlohmann::ordered_json;

Json json_rational(const Rational& r);
Json json_element(const ModelPtr& m, const Element& e);
Json json_ring_ideal(const RingIdeal& i);
Json json_right_ideal(const ModelPtr& m, const RightIdeal& x);
Json json_family(const ConstructibleFamily& fam);
Json json_folner(const ModelPtr& m, const FolnerOutcome& out);
Json json_reversibility(const ModelPtr& m, const ReversibilityReport& rep);
Json json_audit(const ModelPtr& m, const AuditReport& rep);
Json json_relation_report(const RelationReport& rep);
Json json_factorization(const PrimeFactorization& f);
Json json_flatness(const FlatnessReport& rep);

}  // namespace sgl
