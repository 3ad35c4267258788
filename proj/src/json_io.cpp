#include "sgl/json_io.hpp"

namespace sgl {

Json json_rational(const Rational& r) {
  Json j;
  j["num"] = boost::multiprecision::numerator(r).str();
  j["den"] = boost::multiprecision::denominator(r).str();
  return j;
}

Json json_element(const ModelPtr& m, const Element& e) {
  return m->elem_to_string(e);
}

Json json_ring_ideal(const RingIdeal& i) {
  Json j;
  j["ring"] = i.ring().to_string();
  if (i.ring().is_z()) {
    j["n"] = i.z_modulus().str();
  } else {
    const Lat2& l = i.lattice();
    j["hnf"] = Json{{"a", l.a.str()}, {"b", l.b.str()}, {"c", l.c.str()}};
  }
  j["norm"] = i.norm().str();
  return j;
}

Json json_right_ideal(const ModelPtr& m, const RightIdeal& x) {
  Json j;
  switch (x.v.index()) {
    case 0:
      j["form"] = "empty";
      break;
    case 1:
      j["form"] = "principal";
      j["generator"] = json_element(m, std::get<PrincipalIdeal>(x.v).p);
      break;
    case 2: {
      const auto& c = std::get<CosetIdeal>(x.v);
      j["form"] = "coset";
      j["residue"] = re_to_string(m->ring(), c.b);
      j["ideal"] = json_ring_ideal(c.ideal);
      break;
    }
    case 3: {
      const auto& t = std::get<TailIdeal>(x.v);
      j["form"] = "tail";
      j["sporadic"] = t.sporadic;
      j["threshold"] = t.threshold;
      break;
    }
    default: {
      j["form"] = "union";
      Json atoms = Json::array();
      for (const RightIdeal& a : std::get<UnionIdeal>(x.v).atoms)
        atoms.push_back(json_right_ideal(m, a));
      j["atoms"] = atoms;
      break;
    }
  }
  j["display"] = ri_to_string(m, x);
  return j;
}

namespace {

Json json_trace(const ModelPtr& m, const TraceStep& t) {
  Json j;
  j["op"] = trace_op_name(t.op);
  if (t.by_gen >= 0)
    j["by"] = m->elem_to_string(m->generators()[static_cast<std::size_t>(t.by_gen)]);
  if (t.of >= 0) j["of"] = t.of;
  if (t.with >= 0) j["with"] = t.with;
  return j;
}

}  // namespace

Json json_family(const ConstructibleFamily& fam) {
  Json j;
  j["model"] = fam.model->spec_string();
  j["union_closed"] = fam.union_closed;
  j["depth_bound"] = fam.depth_bound;
  j["complete"] = fam.complete;
  Json ideals = Json::array();
  for (const auto& entry : fam.entries) {
    Json e = json_right_ideal(fam.model, entry.ideal);
    e["depth"] = entry.depth;
    e["trace"] = json_trace(fam.model, entry.trace);
    ideals.push_back(e);
  }
  j["size"] = fam.entries.size();
  j["ideals"] = ideals;
  return j;
}

Json json_folner(const ModelPtr& m, const FolnerOutcome& out) {
  Json j;
  j["found"] = out.found;
  if (out.found) {
    const auto& cert = out.certificate;
    Json f = Json::array();
    for (const Element& x : cert.set) f.push_back(json_element(m, x));
    j["set"] = f;
    j["size"] = cert.set.size();
    j["epsilon"] = json_rational(cert.epsilon);
    Json ratios = Json::array();
    for (const auto& [p, r] : cert.ratios)
      ratios.push_back(Json{{"p", json_element(m, p)}, {"ratio", json_rational(r)}});
    j["ratios"] = ratios;
  } else {
    j["note"] = out.note;
  }
  j["best_ratio"] = json_rational(out.best_ratio);
  j["best_size"] = out.best_set.size();
  return j;
}

Json json_reversibility(const ModelPtr& m, const ReversibilityReport& rep) {
  Json j;
  j["holds"] = rep.holds;
  j["exact"] = rep.exact;
  j["radius"] = rep.radius;
  if (rep.witness) {
    j["witness"] = Json::array(
        {json_element(m, rep.witness->first), json_element(m, rep.witness->second)});
  }
  return j;
}

Json json_audit(const ModelPtr& m, const AuditReport& rep) {
  Json j;
  j["consistent"] = rep.consistent;
  j["left_reversible"] = json_reversibility(m, rep.left);
  j["right_reversible"] = json_reversibility(m, rep.right);
  j["folner_found"] = rep.folner_found;
  j["folner_best_ratio"] = json_rational(rep.folner_best);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

Json json_relation_report(const RelationReport& rep) {
  Json j;
  j["seed"] = rep.seed;
  Json checked;
  for (const auto& [name, count] : rep.checked) checked[name] = count;
  j["checked"] = checked;
  Json failures = Json::array();
  for (const auto& f : rep.failures)
    failures.push_back(Json{{"relation", f.relation}, {"detail", f.detail}});
  j["failures"] = failures;
  j["ok"] = rep.all_ok();
  return j;
}

Json json_factorization(const PrimeFactorization& f) {
  Json j = Json::array();
  for (const auto& [prime, e] : f)
    j.push_back(Json{{"prime", json_ring_ideal(prime)}, {"exponent", e}});
  return j;
}

Json json_flatness(const FlatnessReport& rep) {
  Json j;
  j["all_ok"] = rep.all_ok;
  Json cases = Json::array();
  for (const auto& c : rep.cases)
    cases.push_back(Json{{"i", c.i.to_string()},
                         {"j", c.j.to_string()},
                         {"extension_ok", c.extension_ok},
                         {"intersection_ok", c.intersection_ok}});
  j["cases"] = cases;
  return j;
}

}  // namespace sgl
