#include "sgl/amenability.hpp"

#include <doctest.h>

using namespace sgl;

namespace {

RingElem el(long x, long y = 0) { return RingElem{BigInt(x), BigInt(y)}; }

}  // namespace

TEST_CASE("left reversibility") {
  auto ab2 = SemigroupModel::free_abelian(2);
  CHECK(check_left_reversible(ab2, 2).holds);

  auto free2 = SemigroupModel::free_monoid(2);
  auto rep = check_left_reversible(free2, 2);
  REQUIRE_FALSE(rep.holds);
  CHECK(rep.exact);
  CHECK(rep.witness->first == free2->word({0}));
  CHECK(rep.witness->second == free2->word({1}));

  auto axb = SemigroupModel::axb(RingDescriptor::integers());
  auto repa = check_left_reversible(axb, 3);
  REQUIRE_FALSE(repa.holds);
  CHECK(repa.witness->first == axb->affine(el(0), el(2)));
  CHECK(repa.witness->second == axb->affine(el(1), el(2)));
}

TEST_CASE("right reversibility") {
  auto axb = SemigroupModel::axb(RingDescriptor::integers());
  CHECK(check_right_reversible(axb, 3).holds);

  auto free2 = SemigroupModel::free_monoid(2);
  auto rep = check_right_reversible(free2, 2);
  REQUIRE_FALSE(rep.holds);
  CHECK(rep.witness->first == free2->word({0}));
  CHECK(rep.witness->second == free2->word({1}));

  CHECK(check_right_reversible(SemigroupModel::free_abelian(1), 3).holds);
}

TEST_CASE("witness monotonicity in the radius") {
  auto axb = SemigroupModel::axb(RingDescriptor::integers());
  auto r3 = check_left_reversible(axb, 3);
  auto r4 = check_left_reversible(axb, 4);
  REQUIRE_FALSE(r3.holds);
  REQUIRE_FALSE(r4.holds);
  // the radius-3 witness pair is still disjoint at radius 4
  RightIdeal meet = intersect_ideals(axb, ri_principal(axb, r3.witness->first),
                                     ri_principal(axb, r3.witness->second));
  CHECK(meet.is_empty());
}

TEST_CASE("folner search on N") {
  auto n = SemigroupModel::free_abelian(1);
  auto out = folner_search(n, {n->exps({1})}, Rational(1, 10), FolnerBudget{});
  REQUIRE(out.found);
  CHECK(out.certificate.set.size() == 21);
  CHECK(out.certificate.set.front() == n->exps({0}));
  CHECK(out.certificate.set.back() == n->exps({20}));
  REQUIRE(out.certificate.ratios.size() == 1);
  CHECK(out.certificate.ratios[0].second == Rational(2, 21));
}

TEST_CASE("folner search on N^2 finds the box") {
  auto n2 = SemigroupModel::free_abelian(2);
  auto out = folner_search(n2, n2->generators(), Rational(1, 10), FolnerBudget{});
  REQUIRE(out.found);
  CHECK(out.certificate.set.size() == 441);
  for (const auto& [p, r] : out.certificate.ratios) CHECK(r == Rational(2, 21));
}

TEST_CASE("folner search on the free monoid is exhausted with ratio >= 1") {
  auto free2 = SemigroupModel::free_monoid(2);
  FolnerBudget budget;
  budget.max_size = 600;
  auto out = folner_search(free2, free2->generators(), Rational(1, 2), budget);
  CHECK_FALSE(out.found);
  CHECK(out.best_ratio >= 1);
}

TEST_CASE("folner search on a numerical semigroup") {
  auto num = SemigroupModel::numerical({2, 3});
  auto out = folner_search(num, num->generators(), Rational(1, 10), FolnerBudget{});
  REQUIRE(out.found);
  for (const auto& [p, r] : out.certificate.ratios) CHECK(r < Rational(1, 10));
}

TEST_CASE("means from certificates") {
  auto n = SemigroupModel::free_abelian(1);
  auto out = folner_search(n, {n->exps({1})}, Rational(1, 10), FolnerBudget{});
  REQUIRE(out.found);
  DiscreteMean mu = mean_from_folner(out.certificate);
  Rational mass = 0;
  for (const auto& [x, w] : mu.weights) {
    CHECK(w == Rational(1, 21));
    mass += w;
  }
  CHECK(mass == 1);
  // deviation along the generator equals the certificate ratio for uniform
  // means
  CHECK(mean_deviation(n, mu, n->exps({1})) == Rational(2, 21));
  // point mass at the unit
  FolnerCertificate point;
  point.set = {n->exps({0})};
  point.epsilon = 1;
  DiscreteMean delta = mean_from_folner(point);
  CHECK(mean_deviation(n, delta, n->exps({0})) == 0);
  CHECK(mean_deviation(n, delta, n->exps({1})) == 2);
  // the box certificate induces the uniform weight 1/441
  auto n2 = SemigroupModel::free_abelian(2);
  auto box = folner_search(n2, n2->generators(), Rational(1, 10), FolnerBudget{});
  REQUIRE(box.found);
  DiscreteMean mu2 = mean_from_folner(box.certificate);
  for (const auto& [x, w] : mu2.weights) CHECK(w == Rational(1, 441));
  // non-uniform two-point mean pushed along the generator
  DiscreteMean half;
  half.weights = {{n->exps({0}), Rational(1, 2)}, {n->exps({1}), Rational(1, 2)}};
  CHECK(mean_deviation(n, half, n->exps({1})) == 1);
}

TEST_CASE("mean deviation bounded by twice the set defect") {
  for (const char* spec : {"abelian:1", "abelian:2", "numerical:2,3"}) {
    auto m = SemigroupModel::parse(spec);
    auto out = folner_search(m, m->generators(), Rational(1, 6), FolnerBudget{});
    REQUIRE(out.found);
    DiscreteMean mu = mean_from_folner(out.certificate);
    for (const auto& [p, r] : out.certificate.ratios)
      CHECK(mean_deviation(m, mu, p) <= 2 * r);
  }
}

TEST_CASE("vector state defects") {
  auto n = SemigroupModel::free_abelian(1);
  std::vector<Element> f;
  for (int i = 0; i <= 20; ++i) f.push_back(n->exps({i}));
  CHECK(vector_state_defect(n, f, n->exps({1})) == Rational(2, 21));
  CHECK(vector_state_defect(n, f, n->exps({0})) == 0);

  auto free2 = SemigroupModel::free_monoid(2);
  std::vector<Element> f2 = {free2->unit(), free2->word({0}), free2->word({1})};
  CHECK(vector_state_defect(free2, f2, free2->word({0})) == Rational(4, 3));

  // defect vanishes iff the set is invariant
  auto num = SemigroupModel::numerical({2, 3});
  std::vector<Element> f3;
  for (int i = 0; i <= 30; ++i)
    if (num->numerical_member(i)) f3.push_back(num->number(i));
  CHECK(vector_state_defect(num, f3, num->number(0)) == 0);
  CHECK(vector_state_defect(num, f3, num->number(2)) > 0);
}

TEST_CASE("certificate ratios below epsilon imply small defects") {
  auto n2 = SemigroupModel::free_abelian(2);
  auto out = folner_search(n2, n2->generators(), Rational(1, 10), FolnerBudget{});
  REQUIRE(out.found);
  for (const Element& p : out.certificate.test_set)
    CHECK(vector_state_defect(n2, out.certificate.set, p) < Rational(1, 10));
}

TEST_CASE("character proxy follows left reversibility") {
  CHECK(character_exists_proxy(SemigroupModel::free_abelian(2), 2));
  CHECK_FALSE(character_exists_proxy(SemigroupModel::free_monoid(2), 2));
  CHECK_FALSE(character_exists_proxy(SemigroupModel::axb(RingDescriptor::integers()), 3));
}

TEST_CASE("implication audit is consistent across the model zoo") {
  for (const char* spec :
       {"abelian:1", "abelian:2", "free:2", "numerical:2,3", "axb:Z"}) {
    auto m = SemigroupModel::parse(spec);
    AuditParams params;
    params.radius = 3;
    auto rep = implication_audit(m, params);
    CHECK(rep.consistent);
  }
}
