#include "sgl/right_ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sgl {

bool operator==(const UnionIdeal& a, const UnionIdeal& b) {
  return a.atoms == b.atoms;
}

bool operator==(const RightIdeal& a, const RightIdeal& b) {
  return a.tag == b.tag && a.v == b.v;
}

bool ri_less(const RightIdeal& a, const RightIdeal& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  if (a.v.index() != b.v.index()) return a.v.index() < b.v.index();
  switch (a.v.index()) {
    case 0:
      return false;
    case 1:
      return elem_less(std::get<PrincipalIdeal>(a.v).p,
                       std::get<PrincipalIdeal>(b.v).p);
    case 2: {
      const auto &u = std::get<CosetIdeal>(a.v), &v = std::get<CosetIdeal>(b.v);
      if (int c = ideal_cmp(u.ideal, v.ideal); c != 0) return c < 0;
      return re_cmp(u.b, v.b) < 0;
    }
    case 3: {
      const auto &u = std::get<TailIdeal>(a.v), &v = std::get<TailIdeal>(b.v);
      if (u.threshold != v.threshold) return u.threshold < v.threshold;
      return u.sporadic < v.sporadic;
    }
    default: {
      const auto &u = std::get<UnionIdeal>(a.v), &v = std::get<UnionIdeal>(b.v);
      return std::lexicographical_compare(u.atoms.begin(), u.atoms.end(),
                                          v.atoms.begin(), v.atoms.end(), ri_less);
    }
  }
}

namespace {

ModelKind base_kind(const ModelPtr& m) { return m->kind(); }

void check_model(const ModelPtr& m, const RightIdeal& X) {
  if (X.tag != m->tag())
    throw std::invalid_argument("right ideal does not belong to model " +
                                m->spec_string());
}

TailIdeal tail_canonicalize(TailIdeal t) {
  std::sort(t.sporadic.begin(), t.sporadic.end());
  t.sporadic.erase(std::unique(t.sporadic.begin(), t.sporadic.end()),
                   t.sporadic.end());
  while (!t.sporadic.empty() && t.sporadic.back() == t.threshold - 1) {
    t.sporadic.pop_back();
    --t.threshold;
  }
  return t;
}

bool tail_member(const ModelPtr& m, const TailIdeal& t, std::int64_t n) {
  if (!m->numerical_member(n)) return false;
  if (n >= t.threshold) return true;
  return std::binary_search(t.sporadic.begin(), t.sporadic.end(), n);
}

RightIdeal make_union(const ModelPtr& m, std::vector<RightIdeal> atoms);

}  // namespace

RightIdeal ri_empty(const ModelPtr& m) { return RightIdeal{m->tag(), EmptyIdeal{}}; }

RightIdeal ri_full(const ModelPtr& m) { return ri_principal(m, m->unit()); }

RightIdeal ri_tail(const ModelPtr& m, std::vector<std::int64_t> sporadic,
                   std::int64_t threshold) {
  if (m->kind() != ModelKind::Numerical)
    throw std::invalid_argument("tail form needs a numerical model");
  if (threshold < m->conductor()) threshold = m->conductor();
  TailIdeal t{std::move(sporadic), threshold};
  for (auto s : t.sporadic)
    if (s >= t.threshold || !m->numerical_member(s))
      throw std::invalid_argument("sporadic element outside [0, threshold) or not in P");
  return RightIdeal{m->tag(), tail_canonicalize(std::move(t))};
}

RightIdeal ri_coset(const ModelPtr& m, const RingElem& b, const RingIdeal& ideal) {
  if (m->kind() != ModelKind::Axb)
    throw std::invalid_argument("coset form needs an ax+b model");
  if (!(ideal.ring() == m->ring())) throw std::invalid_argument("ring mismatch");
  return RightIdeal{m->tag(), CosetIdeal{canonical_residue(b, ideal), ideal}};
}

RightIdeal ri_principal(const ModelPtr& m, const Element& p) {
  switch (base_kind(m)) {
    case ModelKind::FreeMonoid:
    case ModelKind::FreeAbelian:
      return RightIdeal{m->tag(), PrincipalIdeal{p}};
    case ModelKind::Numerical: {
      std::int64_t off = std::get<std::int64_t>(p.rep);
      std::int64_t thr = off + m->conductor();
      std::vector<std::int64_t> spor;
      for (std::int64_t s = off; s < thr; ++s)
        if (s - off >= 0 && m->numerical_member(s - off)) spor.push_back(s);
      return ri_tail(m, std::move(spor), thr);
    }
    case ModelKind::Axb: {
      const auto& e = std::get<AxbElem>(p.rep);
      return ri_coset(m, e.b, RingIdeal::principal(m->ring(), e.a));
    }
    case ModelKind::Opposite:
      throw std::invalid_argument(
          "constructible right ideals are not modeled for opposite semigroups");
  }
  throw std::logic_error("unreachable");
}

namespace {

RightIdeal make_union(const ModelPtr& m, std::vector<RightIdeal> atoms) {
  // Flatten, drop empties and absorbed atoms, sort.
  std::vector<RightIdeal> flat;
  for (RightIdeal& a : atoms) {
    if (a.is_empty()) continue;
    if (a.is_union()) {
      for (const RightIdeal& sub : std::get<UnionIdeal>(a.v).atoms)
        flat.push_back(sub);
    } else {
      flat.push_back(std::move(a));
    }
  }
  if (flat.empty()) return ri_empty(m);
  if (m->kind() == ModelKind::Numerical) {
    // Tails are union-closed: merge into a single canonical tail.
    std::int64_t thr = std::get<TailIdeal>(flat[0].v).threshold;
    for (const RightIdeal& a : flat)
      thr = std::min(thr, std::get<TailIdeal>(a.v).threshold);
    std::vector<std::int64_t> spor;
    for (const RightIdeal& a : flat) {
      const auto& t = std::get<TailIdeal>(a.v);
      for (auto s : t.sporadic)
        if (s < thr) spor.push_back(s);
      for (std::int64_t s = t.threshold; s < thr; ++s)
        if (m->numerical_member(s)) spor.push_back(s);
    }
    return RightIdeal{m->tag(), tail_canonicalize(TailIdeal{std::move(spor), thr})};
  }
  std::sort(flat.begin(), flat.end(), ri_less);
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  // Antichain: drop atoms contained in another atom.
  std::vector<RightIdeal> keep;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < flat.size() && !absorbed; ++j)
      absorbed = i != j && ri_subset(m, flat[i], flat[j]);
    if (!absorbed) keep.push_back(flat[i]);
  }
  if (keep.size() == 1) return keep[0];
  return RightIdeal{m->tag(), UnionIdeal{std::move(keep)}};
}

}  // namespace

bool ri_membership(const ModelPtr& m, const Element& x, const RightIdeal& X) {
  check_model(m, X);
  switch (X.v.index()) {
    case 0:
      return false;
    case 1:
      return m->left_divide(std::get<PrincipalIdeal>(X.v).p, x).has_value();
    case 2: {
      const auto& c = std::get<CosetIdeal>(X.v);
      const auto& e = std::get<AxbElem>(x.rep);
      return c.ideal.contains(e.a) && c.ideal.contains(re_sub(e.b, c.b));
    }
    case 3:
      return tail_member(m, std::get<TailIdeal>(X.v), std::get<std::int64_t>(x.rep));
    default: {
      for (const RightIdeal& a : std::get<UnionIdeal>(X.v).atoms)
        if (ri_membership(m, x, a)) return true;
      return false;
    }
  }
}

RightIdeal left_mult_ideal(const ModelPtr& m, const Element& p, const RightIdeal& X) {
  check_model(m, X);
  switch (X.v.index()) {
    case 0:
      return X;
    case 1:
      return ri_principal(m, m->multiply(p, std::get<PrincipalIdeal>(X.v).p));
    case 2: {
      const auto& c = std::get<CosetIdeal>(X.v);
      const auto& e = std::get<AxbElem>(p.rep);
      RingIdeal scaled = elem_mult_ideal(e.a, c.ideal);
      RingElem b = re_add(e.b, re_mul(m->ring(), e.a, c.b));
      return ri_coset(m, b, scaled);
    }
    case 3: {
      const auto& t = std::get<TailIdeal>(X.v);
      std::int64_t off = std::get<std::int64_t>(p.rep);
      TailIdeal out;
      out.threshold = t.threshold + off;
      for (auto s : t.sporadic) out.sporadic.push_back(s + off);
      return RightIdeal{m->tag(), tail_canonicalize(std::move(out))};
    }
    default: {
      std::vector<RightIdeal> atoms;
      for (const RightIdeal& a : std::get<UnionIdeal>(X.v).atoms)
        atoms.push_back(left_mult_ideal(m, p, a));
      return make_union(m, std::move(atoms));
    }
  }
}

RightIdeal preimage_ideal(const ModelPtr& m, const Element& p, const RightIdeal& X) {
  check_model(m, X);
  switch (X.v.index()) {
    case 0:
      return X;
    case 1: {
      const Element& w = std::get<PrincipalIdeal>(X.v).p;
      if (m->kind() == ModelKind::FreeMonoid) {
        const auto& pw = std::get<0>(p.rep);
        const auto& ww = std::get<0>(w.rep);
        if (pw.size() >= ww.size()) {
          // p y has prefix w for every y iff w is a prefix of p.
          if (std::equal(ww.begin(), ww.end(), pw.begin())) return ri_full(m);
          return ri_empty(m);
        }
        if (std::equal(pw.begin(), pw.end(), ww.begin()))
          return ri_principal(
              m, m->word(std::vector<std::int32_t>(
                     ww.begin() + static_cast<std::ptrdiff_t>(pw.size()), ww.end())));
        return ri_empty(m);
      }
      // abelian: { y : p + y >= w } = max(w - p, 0) + P
      const auto& pv = std::get<1>(p.rep);
      const auto& wv = std::get<1>(w.rep);
      std::vector<std::int64_t> out(pv.size());
      for (std::size_t i = 0; i < pv.size(); ++i)
        out[i] = std::max<std::int64_t>(wv[i] - pv[i], 0);
      return ri_principal(m, m->exps(std::move(out)));
    }
    case 2: {
      const auto& c = std::get<CosetIdeal>(X.v);
      const auto& e = std::get<AxbElem>(p.rep);
      auto d0 = coset_solve(e.a, re_sub(c.b, e.b), c.ideal);
      if (!d0) return ri_empty(m);
      RingIdeal j = elem_preimage_ideal(e.a, c.ideal);
      return ri_coset(m, *d0, j);
    }
    case 3: {
      const auto& t = std::get<TailIdeal>(X.v);
      std::int64_t off = std::get<std::int64_t>(p.rep);
      TailIdeal out;
      out.threshold = std::max(t.threshold - off, m->conductor());
      for (std::int64_t y = 0; y < out.threshold; ++y)
        if (m->numerical_member(y) && tail_member(m, t, y + off))
          out.sporadic.push_back(y);
      return RightIdeal{m->tag(), tail_canonicalize(std::move(out))};
    }
    default: {
      std::vector<RightIdeal> atoms;
      for (const RightIdeal& a : std::get<UnionIdeal>(X.v).atoms)
        atoms.push_back(preimage_ideal(m, p, a));
      return make_union(m, std::move(atoms));
    }
  }
}

RightIdeal intersect_ideals(const ModelPtr& m, const RightIdeal& X, const RightIdeal& Y) {
  check_model(m, X);
  check_model(m, Y);
  if (X.is_empty() || Y.is_empty()) return ri_empty(m);
  if (X.is_union() || Y.is_union()) {
    std::vector<RightIdeal> xa =
        X.is_union() ? std::get<UnionIdeal>(X.v).atoms : std::vector<RightIdeal>{X};
    std::vector<RightIdeal> ya =
        Y.is_union() ? std::get<UnionIdeal>(Y.v).atoms : std::vector<RightIdeal>{Y};
    std::vector<RightIdeal> out;
    for (const RightIdeal& a : xa)
      for (const RightIdeal& b : ya) out.push_back(intersect_ideals(m, a, b));
    return make_union(m, std::move(out));
  }
  switch (base_kind(m)) {
    case ModelKind::FreeMonoid: {
      const auto& u = std::get<0>(std::get<PrincipalIdeal>(X.v).p.rep);
      const auto& v = std::get<0>(std::get<PrincipalIdeal>(Y.v).p.rep);
      const auto& shorter = u.size() <= v.size() ? u : v;
      const auto& longer = u.size() <= v.size() ? v : u;
      if (std::equal(shorter.begin(), shorter.end(), longer.begin()))
        return u.size() <= v.size() ? Y : X;
      return ri_empty(m);
    }
    case ModelKind::FreeAbelian: {
      const auto& u = std::get<1>(std::get<PrincipalIdeal>(X.v).p.rep);
      const auto& v = std::get<1>(std::get<PrincipalIdeal>(Y.v).p.rep);
      std::vector<std::int64_t> out(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::max(u[i], v[i]);
      return ri_principal(m, m->exps(std::move(out)));
    }
    case ModelKind::Numerical: {
      const auto& s = std::get<TailIdeal>(X.v);
      const auto& t = std::get<TailIdeal>(Y.v);
      TailIdeal out;
      out.threshold = std::max(s.threshold, t.threshold);
      for (std::int64_t n = 0; n < out.threshold; ++n)
        if (tail_member(m, s, n) && tail_member(m, t, n)) out.sporadic.push_back(n);
      return RightIdeal{m->tag(), tail_canonicalize(std::move(out))};
    }
    case ModelKind::Axb: {
      const auto& c1 = std::get<CosetIdeal>(X.v);
      const auto& c2 = std::get<CosetIdeal>(Y.v);
      auto d = coset_intersect_rep(c1.b, c1.ideal, c2.b, c2.ideal);
      if (!d) return ri_empty(m);
      return ri_coset(m, *d, ideal_intersect(c1.ideal, c2.ideal));
    }
    default:
      throw std::logic_error("unreachable");
  }
}

RightIdeal union_ideals(const ModelPtr& m, const RightIdeal& X, const RightIdeal& Y) {
  check_model(m, X);
  check_model(m, Y);
  return make_union(m, {X, Y});
}

namespace {

// Exact decision of atom subset union-of-atoms for coset forms. Reduce each
// cover atom against X; unless one reduction equals X, the pair
// (b, strong-approximation witness) lies in X but escapes the union.
bool coset_subset_of_union(const CosetIdeal& x,
                           const std::vector<RightIdeal>& atoms) {
  std::vector<RingIdeal> reduced;
  for (const RightIdeal& a : atoms) {
    const auto& c = std::get<CosetIdeal>(a.v);
    auto d = coset_intersect_rep(x.b, x.ideal, c.b, c.ideal);
    if (!d) continue;
    RingIdeal meet = ideal_intersect(x.ideal, c.ideal);
    if (meet == x.ideal) {
      // reduction is all of X exactly when the cosets agree mod X's ideal
      if (x.ideal.contains(re_sub(*d, x.b))) return true;
    }
    reduced.push_back(meet);
  }
  std::vector<RingIdeal> proper;
  for (const RingIdeal& j : reduced)
    if (!(j == x.ideal)) proper.push_back(j);
  if (proper.empty()) return false;
  auto witness = strong_approx_witness(x.ideal, proper);
  if (!witness)
    throw std::logic_error("coset union reduction missed an equal ideal");
  return false;  // (x.b, *witness) is in X and in no atom
}

}  // namespace

bool ri_subset(const ModelPtr& m, const RightIdeal& X, const RightIdeal& Y) {
  check_model(m, X);
  check_model(m, Y);
  if (X.is_empty()) return true;
  if (Y.is_empty()) return false;
  if (X.is_union()) {
    for (const RightIdeal& a : std::get<UnionIdeal>(X.v).atoms)
      if (!ri_subset(m, a, Y)) return false;
    return true;
  }
  std::vector<RightIdeal> targets =
      Y.is_union() ? std::get<UnionIdeal>(Y.v).atoms : std::vector<RightIdeal>{Y};
  switch (base_kind(m)) {
    case ModelKind::FreeMonoid:
    case ModelKind::FreeAbelian: {
      // w P inside a union iff w lands in one atom.
      const Element& w = std::get<PrincipalIdeal>(X.v).p;
      for (const RightIdeal& a : targets)
        if (m->left_divide(std::get<PrincipalIdeal>(a.v).p, w)) return true;
      return false;
    }
    case ModelKind::Numerical: {
      const auto& s = std::get<TailIdeal>(X.v);
      std::int64_t bound = s.threshold;
      for (const RightIdeal& a : targets)
        bound = std::max(bound, std::get<TailIdeal>(a.v).threshold);
      for (std::int64_t n = 0; n < bound; ++n) {
        if (!tail_member(m, s, n)) continue;
        bool covered = false;
        for (const RightIdeal& a : targets)
          if (tail_member(m, std::get<TailIdeal>(a.v), n)) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
      return true;
    }
    case ModelKind::Axb: {
      const auto& x = std::get<CosetIdeal>(X.v);
      if (targets.size() == 1) {
        const auto& y = std::get<CosetIdeal>(targets[0].v);
        return x.ideal.subset_of(y.ideal) && y.ideal.contains(re_sub(x.b, y.b));
      }
      return coset_subset_of_union(x, targets);
    }
    default:
      throw std::logic_error("unreachable");
  }
}

RiPrincipality ri_principal_check(const ModelPtr& m, const RightIdeal& X) {
  check_model(m, X);
  RiPrincipality out;
  switch (X.v.index()) {
    case 0:
      out.principal = false;
      return out;
    case 1:
      out.principal = true;
      out.generator = std::get<PrincipalIdeal>(X.v).p;
      return out;
    case 2: {
      const auto& c = std::get<CosetIdeal>(X.v);
      PrincipalityReport rep = is_principal(c.ideal);
      out.certain = rep.exhaustive;
      if (rep.principal) {
        out.principal = true;
        out.generator = m->affine(c.b, *rep.generator);
      }
      return out;
    }
    case 3: {
      const auto& t = std::get<TailIdeal>(X.v);
      std::int64_t lead = t.sporadic.empty() ? t.threshold : t.sporadic.front();
      RightIdeal cand = ri_principal(m, m->number(lead));
      if (cand == X) {
        out.principal = true;
        out.generator = m->number(lead);
      }
      return out;
    }
    default: {
      // A sorted antichain of two or more atoms is never one principal ideal.
      const auto& u = std::get<UnionIdeal>(X.v);
      if (u.atoms.size() == 1) return ri_principal_check(m, u.atoms[0]);
      out.principal = false;
      return out;
    }
  }
}

std::string ri_to_string(const ModelPtr& m, const RightIdeal& X) {
  check_model(m, X);
  switch (X.v.index()) {
    case 0:
      return "{}";
    case 1: {
      const Element& p = std::get<PrincipalIdeal>(X.v).p;
      return m->elem_to_string(p) + "P";
    }
    case 2: {
      const auto& c = std::get<CosetIdeal>(X.v);
      return "(" + re_to_string(m->ring(), c.b) + "+" + c.ideal.to_string() +
             ")x" + c.ideal.to_string() + "*";
    }
    case 3: {
      const auto& t = std::get<TailIdeal>(X.v);
      std::string s = "{";
      for (std::size_t i = 0; i < t.sporadic.size(); ++i)
        s += (i ? "," : "") + std::to_string(t.sporadic[i]);
      return s + "}+[" + std::to_string(t.threshold) + ",oo)";
    }
    default: {
      const auto& u = std::get<UnionIdeal>(X.v);
      std::string s;
      for (std::size_t i = 0; i < u.atoms.size(); ++i)
        s += (i ? " u " : "") + ri_to_string(m, u.atoms[i]);
      return s;
    }
  }
}

RightIdeal ideal_of_word(const ModelPtr& m,
                         const std::vector<std::pair<Element, Element>>& qp) {
  RightIdeal X = ri_full(m);
  for (auto it = qp.rbegin(); it != qp.rend(); ++it)
    X = preimage_ideal(m, it->first, left_mult_ideal(m, it->second, X));
  return X;
}

bool word_membership(const ModelPtr& m, const Element& x,
                     const std::vector<std::pair<Element, Element>>& qp) {
  Element y = x;
  for (const auto& [q, p] : qp) {
    auto z = m->left_divide(p, m->multiply(q, y));
    if (!z) return false;
    y = *z;
  }
  return true;
}

}  // namespace sgl
