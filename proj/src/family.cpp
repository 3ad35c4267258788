#include "sgl/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgl {

std::string trace_op_name(TraceStep::Op op) {
  switch (op) {
    case TraceStep::Op::Root:
      return "root";
    case TraceStep::Op::LeftMult:
      return "left_mult";
    case TraceStep::Op::Preimage:
      return "preimage";
    case TraceStep::Op::Intersect:
      return "intersect";
    case TraceStep::Op::Union:
      return "union";
  }
  return "?";
}

std::optional<int> ConstructibleFamily::find(const RightIdeal& x) const {
  auto it = index.find(x);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ConstructibleFamily compute_family(const ModelPtr& model, int depth,
                                   bool union_closed) {
  if (depth < 1) throw std::invalid_argument("closure depth must be >= 1");
  ConstructibleFamily fam;
  fam.model = model;
  fam.union_closed = union_closed;
  fam.depth_bound = depth;
  auto add = [&](RightIdeal x, int d, TraceStep tr) {
    if (fam.index.count(x)) return false;
    fam.index.emplace(x, static_cast<int>(fam.entries.size()));
    fam.entries.push_back(FamilyEntry{std::move(x), d, tr});
    return true;
  };
  add(ri_full(model), 0, TraceStep{});
  add(ri_empty(model), 0, TraceStep{});
  const auto& gens = model->generators();
  for (int round = 1; round <= depth; ++round) {
    const int snapshot = static_cast<int>(fam.entries.size());
    bool grew = false;
    for (int i = 0; i < snapshot; ++i) {
      for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        grew |= add(left_mult_ideal(model, gens[g], fam.at(i)), round,
                    TraceStep{TraceStep::Op::LeftMult, g, i, -1});
        grew |= add(preimage_ideal(model, gens[g], fam.at(i)), round,
                    TraceStep{TraceStep::Op::Preimage, g, i, -1});
      }
    }
    for (int i = 0; i < snapshot; ++i)
      for (int j = i + 1; j < snapshot; ++j) {
        grew |= add(intersect_ideals(model, fam.at(i), fam.at(j)), round,
                    TraceStep{TraceStep::Op::Intersect, -1, i, j});
        if (union_closed)
          grew |= add(union_ideals(model, fam.at(i), fam.at(j)), round,
                      TraceStep{TraceStep::Op::Union, -1, i, j});
      }
    if (!grew) {
      fam.complete = true;
      break;
    }
  }
  return fam;
}

IndependenceResult check_independence(const ConstructibleFamily& family) {
  const ModelPtr& m = family.model;
  IndependenceResult res;
  for (std::size_t xi = 0; xi < family.entries.size(); ++xi) {
    const RightIdeal& X = family.at(static_cast<int>(xi));
    if (X.is_empty()) continue;
    std::vector<int> candidates;
    for (std::size_t j = 0; j < family.entries.size(); ++j) {
      const RightIdeal& Y = family.at(static_cast<int>(j));
      if (j == xi || Y.is_empty() || Y == X) continue;
      if (ri_subset(m, Y, X)) candidates.push_back(static_cast<int>(j));
    }
    if (candidates.empty()) continue;
    RightIdeal all = ri_empty(m);
    for (int j : candidates) all = union_ideals(m, all, family.at(j));
    if (!ri_subset(m, X, all)) continue;
    // Covered: pick a greedy prefix in family order, then drop redundancies.
    std::vector<int> cover;
    RightIdeal partial = ri_empty(m);
    for (int j : candidates) {
      partial = union_ideals(m, partial, family.at(j));
      cover.push_back(j);
      if (ri_subset(m, X, partial)) break;
    }
    for (std::size_t k = 0; k < cover.size();) {
      RightIdeal rest = ri_empty(m);
      for (std::size_t l = 0; l < cover.size(); ++l)
        if (l != k) rest = union_ideals(m, rest, family.at(cover[l]));
      if (ri_subset(m, X, rest))
        cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(k));
      else
        ++k;
    }
    res.pass = false;
    res.witness = static_cast<int>(xi);
    res.covers = cover;
    return res;
  }
  return res;
}

QuasiLatticeResult check_quasi_lattice(const ConstructibleFamily& family) {
  QuasiLatticeResult res;
  for (std::size_t i = 0; i < family.entries.size(); ++i) {
    const RightIdeal& X = family.at(static_cast<int>(i));
    if (X.is_empty()) continue;
    RiPrincipality p = ri_principal_check(family.model, X);
    if (!p.principal) {
      res.pass = false;
      res.witness = static_cast<int>(i);
      res.certain = p.certain;
      return res;
    }
  }
  return res;
}

bool verify_qpint(const ModelPtr& model, const RightIdeal& X,
                  const std::vector<std::pair<Element, Element>>& qp,
                  int window_radius) {
  // Left side: apply ... p1^{-1} q1 to X, then q1^{-1} p1 ... on top.
  RightIdeal lhs = X;
  for (const auto& [q, p] : qp) lhs = preimage_ideal(model, p, left_mult_ideal(model, q, lhs));
  for (auto it = qp.rbegin(); it != qp.rend(); ++it)
    lhs = preimage_ideal(model, it->first, left_mult_ideal(model, it->second, lhs));
  RightIdeal rhs = intersect_ideals(model, ideal_of_word(model, qp), X);
  for (const Element& x : model->ball(window_radius))
    if (ri_membership(model, x, lhs) != ri_membership(model, x, rhs)) return false;
  return true;
}

std::pair<RightIdeal, RightIdeal> boolean_difference_form(
    const ConstructibleFamily& family, const std::vector<int>& f,
    const std::vector<int>& f_prime, int window_radius) {
  const ModelPtr& m = family.model;
  if (f_prime.empty()) throw std::invalid_argument("F' must be nonempty");
  for (int i : f_prime)
    if (std::find(f.begin(), f.end(), i) == f.end())
      throw std::invalid_argument("F' must be a subset of F");
  RightIdeal X = family.at(f_prime[0]);
  for (std::size_t k = 1; k < f_prime.size(); ++k)
    X = intersect_ideals(m, X, family.at(f_prime[k]));
  RightIdeal Y = ri_empty(m);
  for (int i : f) {
    if (std::find(f_prime.begin(), f_prime.end(), i) != f_prime.end()) continue;
    Y = union_ideals(m, Y, intersect_ideals(m, X, family.at(i)));
  }
  if (!ri_subset(m, Y, X)) throw std::logic_error("difference form: Y escaped X");
  for (const Element& x : m->ball(window_radius)) {
    bool direct = true;
    for (int i : f_prime) direct = direct && ri_membership(m, x, family.at(i));
    for (int i : f) {
      if (std::find(f_prime.begin(), f_prime.end(), i) != f_prime.end()) continue;
      direct = direct && !ri_membership(m, x, family.at(i));
    }
    bool via_form = ri_membership(m, x, X) && !ri_membership(m, x, Y);
    if (direct != via_form)
      throw std::logic_error("difference form failed window verification");
  }
  return {X, Y};
}

}  // namespace sgl
