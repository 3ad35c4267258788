#include "sgl/operator_model.hpp"

#include "sgl/parallel.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sgl {

OperatorMatrix mat_identity(int n) {
  OperatorMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

OperatorMatrix mat_mul(const OperatorMatrix& x, const OperatorMatrix& y) {
  OperatorMatrix out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

OperatorMatrix mat_add(const OperatorMatrix& x, const OperatorMatrix& y) {
  OperatorMatrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

OperatorMatrix mat_sub(const OperatorMatrix& x, const OperatorMatrix& y) {
  OperatorMatrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

OperatorMatrix mat_transpose(const OperatorMatrix& x) {
  OperatorMatrix out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

OperatorMatrix mat_diagonal(const OperatorMatrix& x) {
  OperatorMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) out.at(i, i) = x.at(i, i);
  return out;
}

bool mat_is_zero(const OperatorMatrix& x) {
  return std::all_of(x.a.begin(), x.a.end(), [](std::int64_t v) { return v == 0; });
}

std::optional<int> TruncatedRepresentation::find(const Element& x) const {
  auto it = index.find(x);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

TruncatedRepresentation build_truncation(const ModelPtr& model, int radius,
                                         int interior_depth, int test_radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  TruncatedRepresentation rep;
  rep.model = model;
  rep.radius = radius;
  rep.window = model->ball(radius);
  for (std::size_t i = 0; i < rep.window.size(); ++i)
    rep.index.emplace(rep.window[i], static_cast<int>(i));
  rep.test_elements = model->ball(test_radius);
  rep.interior_depth = interior_depth;
  const int n = static_cast<int>(rep.window.size());
  rep.interior.assign(static_cast<std::size_t>(interior_depth) + 1,
                      std::vector<char>(static_cast<std::size_t>(n), 1));
  for (int k = 1; k <= interior_depth; ++k) {
    auto& cur = rep.interior[static_cast<std::size_t>(k)];
    const auto& prev = rep.interior[static_cast<std::size_t>(k - 1)];
    for (int i = 0; i < n; ++i) {
      bool ok = true;
      for (const Element& t : rep.test_elements) {
        Element up = model->multiply(t, rep.window[static_cast<std::size_t>(i)]);
        auto upi = rep.find(up);
        if (!upi || !prev[static_cast<std::size_t>(*upi)]) {
          ok = false;
          break;
        }
        auto down = model->left_divide(t, rep.window[static_cast<std::size_t>(i)]);
        if (down) {
          auto di = rep.find(*down);
          if (!di || !prev[static_cast<std::size_t>(*di)]) {
            ok = false;
            break;
          }
        }
      }
      cur[static_cast<std::size_t>(i)] = ok ? 1 : 0;
    }
  }
  return rep;
}

VMatrix matrix_V(const TruncatedRepresentation& rep, const Element& p) {
  const int n = static_cast<int>(rep.window.size());
  VMatrix out;
  out.m = OperatorMatrix(n);
  out.defective.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    Element img = rep.model->multiply(p, rep.window[static_cast<std::size_t>(c)]);
    if (auto r = rep.find(img))
      out.m.at(*r, c) = 1;
    else
      out.defective[static_cast<std::size_t>(c)] = 1;
  }
  return out;
}

OperatorMatrix matrix_E(const TruncatedRepresentation& rep, const RightIdeal& x) {
  const int n = static_cast<int>(rep.window.size());
  OperatorMatrix out(n);
  for (int i = 0; i < n; ++i)
    if (ri_membership(rep.model, rep.window[static_cast<std::size_t>(i)], x))
      out.at(i, i) = 1;
  return out;
}

MaskedMatrix evaluate_word(const TruncatedRepresentation& rep, const OpWord& word) {
  if (2 * static_cast<int>(word.size()) > rep.interior_depth)
    throw std::invalid_argument("word too long for the truncation window");
  const int n = static_cast<int>(rep.window.size());
  MaskedMatrix out;
  out.m = OperatorMatrix(n);
  out.valid.assign(static_cast<std::size_t>(n), 1);
  for (int c = 0; c < n; ++c) {
    Element y = rep.window[static_cast<std::size_t>(c)];
    bool zero = false, valid = true;
    for (auto it = word.rbegin(); it != word.rend() && !zero; ++it) {
      const auto& [p, q] = *it;
      y = rep.model->multiply(q, y);
      if (!rep.find(y)) {
        valid = false;
        break;
      }
      auto div = rep.model->left_divide(p, y);
      if (!div) {
        zero = true;  // exact zero, independent of the window
        break;
      }
      y = *div;
      if (!rep.find(y)) {
        valid = false;
        break;
      }
    }
    if (!valid) {
      out.valid[static_cast<std::size_t>(c)] = 0;
      continue;
    }
    if (!zero) out.m.at(*rep.find(y), c) = 1;
  }
  return out;
}

OperatorMatrix conditional_expectation(const TruncatedRepresentation& rep,
                                       const OperatorMatrix& t) {
  (void)rep;
  return mat_diagonal(t);
}

GroupEval::GroupEval(ModelPtr model) : model_(std::move(model)) {
  switch (model_->kind()) {
    case ModelKind::FreeMonoid:
    case ModelKind::FreeAbelian:
    case ModelKind::Numerical:
    case ModelKind::Axb:
      break;
    default:
      throw std::invalid_argument("no group normal form for model " +
                                  model_->spec_string());
  }
}

GroupElem GroupEval::identity() const {
  switch (model_->kind()) {
    case ModelKind::FreeMonoid:
      return GroupElem{std::vector<std::int32_t>{}};
    case ModelKind::FreeAbelian:
      return GroupElem{std::vector<std::int64_t>(model_->rank(), 0)};
    case ModelKind::Numerical:
      return GroupElem{std::int64_t{0}};
    default:
      return GroupElem{std::pair<FieldElem, FieldElem>{
          FieldElem{0, 0}, FieldElem{1, 0}}};
  }
}

GroupElem GroupEval::of(const Element& e) const {
  switch (model_->kind()) {
    case ModelKind::FreeMonoid: {
      std::vector<std::int32_t> w;
      for (auto i : std::get<0>(e.rep)) w.push_back(i + 1);  // positive letters
      return GroupElem{std::move(w)};
    }
    case ModelKind::FreeAbelian:
      return GroupElem{std::get<1>(e.rep)};
    case ModelKind::Numerical:
      return GroupElem{std::get<2>(e.rep)};
    default: {
      const auto& u = std::get<AxbElem>(e.rep);
      return GroupElem{std::pair<FieldElem, FieldElem>{fe_from(u.b), fe_from(u.a)}};
    }
  }
}

GroupElem GroupEval::mul(const GroupElem& a, const GroupElem& b) const {
  switch (model_->kind()) {
    case ModelKind::FreeMonoid: {
      auto w = std::get<0>(a.rep);
      for (auto letter : std::get<0>(b.rep)) {
        if (!w.empty() && w.back() == -letter)
          w.pop_back();
        else
          w.push_back(letter);
      }
      return GroupElem{std::move(w)};
    }
    case ModelKind::FreeAbelian: {
      auto v = std::get<1>(a.rep);
      const auto& u = std::get<1>(b.rep);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += u[i];
      return GroupElem{std::move(v)};
    }
    case ModelKind::Numerical:
      return GroupElem{std::get<2>(a.rep) + std::get<2>(b.rep)};
    default: {
      const auto& [b1, a1] = std::get<3>(a.rep);
      const auto& [b2, a2] = std::get<3>(b.rep);
      const RingDescriptor& ring = model_->ring();
      return GroupElem{std::pair<FieldElem, FieldElem>{
          fe_add(b1, fe_mul(ring, a1, b2)), fe_mul(ring, a1, a2)}};
    }
  }
}

GroupElem GroupEval::inv(const GroupElem& a) const {
  switch (model_->kind()) {
    case ModelKind::FreeMonoid: {
      const auto& w = std::get<0>(a.rep);
      std::vector<std::int32_t> out(w.rbegin(), w.rend());
      for (auto& letter : out) letter = -letter;
      return GroupElem{std::move(out)};
    }
    case ModelKind::FreeAbelian: {
      auto v = std::get<1>(a.rep);
      for (auto& x : v) x = -x;
      return GroupElem{std::move(v)};
    }
    case ModelKind::Numerical:
      return GroupElem{-std::get<2>(a.rep)};
    default: {
      const auto& [b, av] = std::get<3>(a.rep);
      const RingDescriptor& ring = model_->ring();
      FieldElem ai = fe_inv(ring, av);
      FieldElem nb = fe_mul(ring, ai, b);
      return GroupElem{std::pair<FieldElem, FieldElem>{
          FieldElem{-nb.x, -nb.y}, ai}};
    }
  }
}

bool GroupEval::is_identity(const GroupElem& a) const { return a == identity(); }

GroupElem GroupEval::word_product(const OpWord& word) const {
  GroupElem g = identity();
  for (const auto& [p, q] : word) g = mul(g, mul(inv(of(p)), of(q)));
  return g;
}

RelationReport verify_relations(const TruncatedRepresentation& rep,
                                const ConstructibleFamily& family,
                                const SampleConfig& cfg) {
  RelationReport report;
  report.seed = cfg.seed;
  const ModelPtr& m = rep.model;
  const int n = static_cast<int>(rep.window.size());
  auto pairs = m->ball(cfg.pair_radius);
  auto fail = [&](const std::string& rel, const std::string& detail) {
    report.failures.push_back(RelationFailure{rel, detail});
  };
  // I.(i): V_{pq} = V_p V_q wherever the product path stays in the window.
  for (const Element& p : pairs)
    for (const Element& q : pairs) {
      VMatrix vp = matrix_V(rep, p), vq = matrix_V(rep, q);
      VMatrix vpq = matrix_V(rep, m->multiply(p, q));
      OperatorMatrix prod = mat_mul(vp.m, vq.m);
      for (int c = 0; c < n; ++c) {
        Element qx = m->multiply(q, rep.window[static_cast<std::size_t>(c)]);
        auto qi = rep.find(qx);
        if (!qi || !rep.find(m->multiply(p, qx))) continue;
        ++report.checked["I.i"];
        for (int r = 0; r < n; ++r)
          if (prod.at(r, c) != vpq.m.at(r, c)) {
            fail("I.i", "p=" + m->elem_to_string(p) + " q=" + m->elem_to_string(q) +
                            " col=" + m->elem_to_string(rep.window[static_cast<std::size_t>(c)]));
            break;
          }
      }
    }
  // I.(ii) and the adjoint identity, cross-checked against the ideal engine.
  for (const Element& p : pairs)
    for (const auto& entry : family.entries) {
      const RightIdeal& x = entry.ideal;
      VMatrix vp = matrix_V(rep, p);
      OperatorMatrix ex = matrix_E(rep, x);
      OperatorMatrix lhs = mat_mul(mat_mul(vp.m, ex), mat_transpose(vp.m));
      OperatorMatrix rhs = matrix_E(rep, left_mult_ideal(m, p, x));
      for (int c = 0; c < n; ++c) {
        auto div = m->left_divide(p, rep.window[static_cast<std::size_t>(c)]);
        if (div && !rep.find(*div)) continue;  // preimage exists but left window
        ++report.checked["I.ii"];
        for (int r = 0; r < n; ++r)
          if (lhs.at(r, c) != rhs.at(r, c)) {
            fail("I.ii", "p=" + m->elem_to_string(p) + " X=" + ri_to_string(m, x) +
                             " col=" +
                             m->elem_to_string(rep.window[static_cast<std::size_t>(c)]));
            break;
          }
      }
      OperatorMatrix lhs2 = mat_mul(mat_mul(mat_transpose(vp.m), ex), vp.m);
      OperatorMatrix rhs2 = matrix_E(rep, preimage_ideal(m, p, x));
      for (int c = 0; c < n; ++c) {
        if (vp.defective[static_cast<std::size_t>(c)]) continue;
        ++report.checked["adjoint"];
        for (int r = 0; r < n; ++r)
          if (lhs2.at(r, c) != rhs2.at(r, c)) {
            fail("adjoint", "p=" + m->elem_to_string(p) + " X=" + ri_to_string(m, x) +
                                " col=" +
                                m->elem_to_string(rep.window[static_cast<std::size_t>(c)]));
            break;
          }
      }
    }
  // II.(i)-(iii) plus the union relation.
  if (!(matrix_E(rep, ri_full(m)) == mat_identity(n))) fail("II.i", "E_P != 1");
  ++report.checked["II.i"];
  if (!mat_is_zero(matrix_E(rep, ri_empty(m)))) fail("II.ii", "E_empty != 0");
  ++report.checked["II.ii"];
  for (const auto& ex : family.entries)
    for (const auto& ey : family.entries) {
      OperatorMatrix mx = matrix_E(rep, ex.ideal), my = matrix_E(rep, ey.ideal);
      OperatorMatrix meet = matrix_E(rep, intersect_ideals(m, ex.ideal, ey.ideal));
      ++report.checked["II.iii"];
      if (!(mat_mul(mx, my) == meet))
        fail("II.iii", ri_to_string(m, ex.ideal) + " ^ " + ri_to_string(m, ey.ideal));
      OperatorMatrix join = matrix_E(rep, union_ideals(m, ex.ideal, ey.ideal));
      ++report.checked["IIu.iv"];
      if (!(mat_sub(mat_add(mx, my), meet) == join))
        fail("IIu.iv", ri_to_string(m, ex.ideal) + " v " + ri_to_string(m, ey.ideal));
    }
  // Seeded random alternating words: word-product relation and diagonal
  // extraction. Words are drawn sequentially from the seed, verified across
  // workers, and merged by index.
  std::uint64_t state = cfg.seed ^ 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<OpWord> words;
  for (int w = 0; w < cfg.random_words; ++w) {
    int len = 1 + static_cast<int>(next() % static_cast<std::uint64_t>(cfg.max_word_len));
    OpWord word;
    for (int i = 0; i < len; ++i) {
      const Element& p = pairs[next() % pairs.size()];
      const Element& q = pairs[next() % pairs.size()];
      word.push_back({p, q});
    }
    words.push_back(std::move(word));
  }
  auto outcomes = parallel_map<std::pair<WordCheck, WordCheck>>(
      words.size(), [&](std::size_t i) {
        return std::make_pair(verify_word_product_relation(rep, words[i]),
                              verify_diagonal_extraction(rep, words[i]));
      });
  for (const auto& [wc, fc] : outcomes) {
    ++report.checked["word_product"];
    if (!wc.ok) fail("word_product", wc.detail);
    ++report.checked["diagonal"];
    if (!fc.ok) fail("diagonal", fc.detail);
  }
  return report;
}

namespace {

std::string word_to_string(const ModelPtr& m, const OpWord& word) {
  std::string s;
  for (const auto& [p, q] : word)
    s += "(" + m->elem_to_string(p) + "," + m->elem_to_string(q) + ")";
  return s;
}

// The ideal an identity word projects onto: q_m^{-1} p_m ... q_1^{-1} p_1 P.
RightIdeal word_relation_ideal(const ModelPtr& m, const OpWord& word) {
  std::vector<std::pair<Element, Element>> qp;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    qp.push_back({it->second, it->first});
  return ideal_of_word(m, qp);
}

}  // namespace

WordCheck verify_word_product_relation(const TruncatedRepresentation& rep,
                                       const OpWord& word) {
  WordCheck out;
  out.word = word;
  const ModelPtr& m = rep.model;
  GroupEval geval(m);
  out.group_identity = geval.is_identity(geval.word_product(word));
  MaskedMatrix eval = evaluate_word(rep, word);
  const int n = static_cast<int>(rep.window.size());
  if (out.group_identity) {
    OperatorMatrix expected = matrix_E(rep, word_relation_ideal(m, word));
    for (int c = 0; c < n; ++c) {
      if (!eval.valid[static_cast<std::size_t>(c)]) continue;
      for (int r = 0; r < n; ++r)
        if (eval.m.at(r, c) != expected.at(r, c)) {
          out.ok = false;
          out.detail = "word " + word_to_string(m, word) +
                       " disagrees with its ideal projection";
          return out;
        }
    }
    out.ok = true;
    return out;
  }
  for (int c = 0; c < n; ++c) {
    if (!eval.valid[static_cast<std::size_t>(c)]) continue;
    if (eval.m.at(c, c) != 0) {
      out.ok = false;
      out.detail = "word " + word_to_string(m, word) +
                   " has a diagonal fixed point but nontrivial group product";
      return out;
    }
  }
  out.ok = true;
  return out;
}

WordCheck verify_diagonal_extraction(const TruncatedRepresentation& rep,
                                     const OpWord& word) {
  WordCheck out = verify_word_product_relation(rep, word);
  if (!out.ok) return out;
  // The diagonal part is the full projection for identity words and zero for
  // all others, so it lies in the span of the E_X; recheck directly.
  MaskedMatrix eval = evaluate_word(rep, word);
  OperatorMatrix diag = conditional_expectation(rep, eval.m);
  const int n = static_cast<int>(rep.window.size());
  if (out.group_identity) {
    OperatorMatrix expected = matrix_E(rep, word_relation_ideal(rep.model, word));
    for (int c = 0; c < n; ++c) {
      if (!eval.valid[static_cast<std::size_t>(c)]) continue;
      if (diag.at(c, c) != expected.at(c, c)) {
        out.ok = false;
        out.detail = "diagonal extraction escaped the projection span";
        return out;
      }
    }
  } else {
    for (int c = 0; c < n; ++c) {
      if (!eval.valid[static_cast<std::size_t>(c)]) continue;
      if (diag.at(c, c) != 0) {
        out.ok = false;
        out.detail = "diagonal extraction nonzero for a nontrivial word";
        return out;
      }
    }
  }
  return out;
}

Rational state_average_matrix(const TruncatedRepresentation& rep,
                              const MaskedMatrix& m, const std::vector<int>& f_cols) {
  (void)rep;
  std::int64_t sum = 0;
  for (int c : f_cols)
    for (int r : f_cols) sum += m.m.at(r, c);
  return Rational(sum, static_cast<std::int64_t>(f_cols.size()));
}

Rational state_average_combinatorial(const TruncatedRepresentation& rep,
                                     const OpWord& word, const std::vector<int>& f_cols) {
  std::int64_t count = 0;
  for (int c : f_cols) {
    Element y = rep.window[static_cast<std::size_t>(c)];
    bool zero = false;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      y = rep.model->multiply(it->second, y);
      auto div = rep.model->left_divide(it->first, y);
      if (!div) {
        zero = true;
        break;
      }
      y = *div;
    }
    if (zero) continue;
    auto yi = rep.find(y);
    if (yi && std::find(f_cols.begin(), f_cols.end(), *yi) != f_cols.end()) ++count;
  }
  return Rational(count, static_cast<std::int64_t>(f_cols.size()));
}

void dump_matrix(const TruncatedRepresentation& rep, const std::string& name,
                 const OperatorMatrix& m, std::ostream& os) {
  os << "# " << name << " " << m.n << " " << m.n << "\n";
  os << "# window";
  for (const Element& x : rep.window) os << " " << rep.model->elem_to_string(x);
  os << "\n";
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) os << (c ? " " : "") << m.at(r, c);
    os << "\n";
  }
}

Rational vector_state_norm_sq(const TruncatedRepresentation& rep, const Element& p,
                              const std::vector<int>& f_cols) {
  const int n = static_cast<int>(rep.window.size());
  VMatrix vp = matrix_V(rep, p);
  std::vector<std::int64_t> xi(static_cast<std::size_t>(n), 0);
  for (int c : f_cols) xi[static_cast<std::size_t>(c)] = 1;
  std::vector<std::int64_t> vxi(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) vxi[static_cast<std::size_t>(r)] += vp.m.at(r, c) * xi[static_cast<std::size_t>(c)];
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    std::int64_t d = vxi[static_cast<std::size_t>(i)] - xi[static_cast<std::size_t>(i)];
    sum += d * d;
  }
  return Rational(sum, static_cast<std::int64_t>(f_cols.size()));
}

}  // namespace sgl
