#include "sgl/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace sgl {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

int cmp_int64_vec(const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

bool elem_less(const Element& a, const Element& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  if (a.rep.index() != b.rep.index()) return a.rep.index() < b.rep.index();
  switch (a.rep.index()) {
    case 0: {  // word, shortlex
      const auto &u = std::get<0>(a.rep), &v = std::get<0>(b.rep);
      if (u.size() != v.size()) return u.size() < v.size();
      return u < v;
    }
    case 1:
      return cmp_int64_vec(std::get<1>(a.rep), std::get<1>(b.rep)) < 0;
    case 2:
      return std::get<2>(a.rep) < std::get<2>(b.rep);
    default: {
      const auto &u = std::get<3>(a.rep), &v = std::get<3>(b.rep);
      if (int c = re_cmp(u.b, v.b); c != 0) return c < 0;
      return re_cmp(u.a, v.a) < 0;
    }
  }
}

ModelPtr SemigroupModel::free_monoid(int rank) {
  if (rank < 1) throw std::invalid_argument("free monoid rank must be positive");
  auto m = std::shared_ptr<SemigroupModel>(new SemigroupModel());
  m->kind_ = ModelKind::FreeMonoid;
  m->rank_ = rank;
  m->spec_ = "free:" + std::to_string(rank);
  m->tag_ = fnv1a(m->spec_);
  for (int i = 0; i < rank; ++i)
    m->gens_.push_back(Element{m->tag_, std::vector<std::int32_t>{i}});
  return m;
}

ModelPtr SemigroupModel::free_abelian(int rank) {
  if (rank < 1) throw std::invalid_argument("abelian monoid rank must be positive");
  auto m = std::shared_ptr<SemigroupModel>(new SemigroupModel());
  m->kind_ = ModelKind::FreeAbelian;
  m->rank_ = rank;
  m->spec_ = "abelian:" + std::to_string(rank);
  m->tag_ = fnv1a(m->spec_);
  for (int i = 0; i < rank; ++i) {
    std::vector<std::int64_t> v(rank, 0);
    v[i] = 1;
    m->gens_.push_back(Element{m->tag_, std::move(v)});
  }
  return m;
}

ModelPtr SemigroupModel::numerical(std::vector<std::int64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty() || gens.front() < 1)
    throw std::invalid_argument("numerical semigroup needs positive generators");
  std::int64_t g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("numerical semigroup generators must be coprime");
  auto m = std::shared_ptr<SemigroupModel>(new SemigroupModel());
  m->kind_ = ModelKind::Numerical;
  m->num_gens_ = gens;
  std::string s = "numerical:";
  for (std::size_t i = 0; i < gens.size(); ++i)
    s += (i ? "," : "") + std::to_string(gens[i]);
  m->spec_ = s;
  m->tag_ = fnv1a(s);
  // Apery set with respect to the smallest generator, by Dijkstra on the
  // residue graph; w[r] is the least member congruent to r.
  std::int64_t g1 = gens[0];
  std::vector<std::int64_t> w(g1, -1);
  using Node = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [val, r] = pq.top();
    pq.pop();
    if (w[r] >= 0) continue;
    w[r] = val;
    for (auto gv : gens) pq.push({val + gv, (r + gv) % g1});
  }
  m->apery_ = w;
  std::int64_t frob = -1;
  for (std::int64_t r = 0; r < g1; ++r) frob = std::max(frob, w[r] - g1);
  m->conductor_ = frob + 1;
  for (auto gv : gens) m->gens_.push_back(Element{m->tag_, gv});
  return m;
}

ModelPtr SemigroupModel::axb(const RingDescriptor& ring) {
  auto m = std::shared_ptr<SemigroupModel>(new SemigroupModel());
  m->kind_ = ModelKind::Axb;
  m->ring_ = ring;
  m->spec_ = "axb:" + ring.to_string();
  m->tag_ = fnv1a(m->spec_);
  auto mk = [&](RingElem b, RingElem a) {
    m->gens_.push_back(Element{m->tag_, AxbElem{std::move(b), std::move(a)}});
  };
  if (ring.is_z()) {
    mk(RingElem{BigInt(1), BigInt(0)}, RingElem{BigInt(1), BigInt(0)});
    mk(RingElem{BigInt(0), BigInt(0)}, RingElem{BigInt(2), BigInt(0)});
    mk(RingElem{BigInt(0), BigInt(0)}, RingElem{BigInt(3), BigInt(0)});
  } else {
    // Translations by the integral basis, plus dilations by 2 and 1+w; the
    // latter has an unbalanced prime factorization in class number > 1 rings.
    mk(RingElem{BigInt(1), BigInt(0)}, RingElem{BigInt(1), BigInt(0)});
    mk(RingElem{BigInt(0), BigInt(1)}, RingElem{BigInt(1), BigInt(0)});
    mk(RingElem{BigInt(0), BigInt(0)}, RingElem{BigInt(2), BigInt(0)});
    mk(RingElem{BigInt(0), BigInt(0)}, RingElem{BigInt(1), BigInt(1)});
  }
  return m;
}

ModelPtr SemigroupModel::opposite(ModelPtr inner) {
  if (!inner) throw std::invalid_argument("opposite of null model");
  auto m = std::shared_ptr<SemigroupModel>(new SemigroupModel());
  m->kind_ = ModelKind::Opposite;
  m->inner_ = std::move(inner);
  m->spec_ = "op(" + m->inner_->spec_string() + ")";
  m->tag_ = fnv1a(m->spec_);
  for (const Element& g : m->inner_->generators())
    m->gens_.push_back(Element{m->tag_, g.rep});
  return m;
}

ModelPtr SemigroupModel::parse(const std::string& spec) {
  auto fail = [&] { throw std::invalid_argument("cannot parse model spec: " + spec); };
  if (spec.rfind("op(", 0) == 0) {
    if (spec.back() != ')') fail();
    return opposite(parse(spec.substr(3, spec.size() - 4)));
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail();
  std::string head = spec.substr(0, colon), body = spec.substr(colon + 1);
  if (head == "free") return free_monoid(std::stoi(body));
  if (head == "abelian") return free_abelian(std::stoi(body));
  if (head == "numerical") {
    std::vector<std::int64_t> gens;
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto next = body.find(',', pos);
      if (next == std::string::npos) next = body.size();
      gens.push_back(std::stoll(body.substr(pos, next - pos)));
      pos = next + 1;
    }
    return numerical(gens);
  }
  if (head == "axb") return axb(RingDescriptor::parse(body));
  fail();
  return nullptr;
}

void SemigroupModel::check_tag(const Element& e) const {
  if (e.tag != tag_)
    throw std::invalid_argument("element does not belong to model " + spec_);
}

Element SemigroupModel::unit() const {
  switch (kind_) {
    case ModelKind::FreeMonoid:
      return Element{tag_, std::vector<std::int32_t>{}};
    case ModelKind::FreeAbelian:
      return Element{tag_, std::vector<std::int64_t>(rank_, 0)};
    case ModelKind::Numerical:
      return Element{tag_, std::int64_t{0}};
    case ModelKind::Axb:
      return Element{tag_, AxbElem{RingElem{BigInt(0), BigInt(0)},
                                   RingElem{BigInt(1), BigInt(0)}}};
    case ModelKind::Opposite:
      return Element{tag_, inner_->unit().rep};
  }
  throw std::logic_error("unreachable");
}

Element SemigroupModel::multiply(const Element& p, const Element& q) const {
  check_tag(p);
  check_tag(q);
  switch (kind_) {
    case ModelKind::FreeMonoid: {
      auto w = std::get<0>(p.rep);
      const auto& v = std::get<0>(q.rep);
      w.insert(w.end(), v.begin(), v.end());
      return Element{tag_, std::move(w)};
    }
    case ModelKind::FreeAbelian: {
      auto w = std::get<1>(p.rep);
      const auto& v = std::get<1>(q.rep);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
      return Element{tag_, std::move(w)};
    }
    case ModelKind::Numerical:
      return Element{tag_, std::get<2>(p.rep) + std::get<2>(q.rep)};
    case ModelKind::Axb: {
      const auto &u = std::get<3>(p.rep), &v = std::get<3>(q.rep);
      return Element{tag_, AxbElem{re_add(u.b, re_mul(ring_, u.a, v.b)),
                                   re_mul(ring_, u.a, v.a)}};
    }
    case ModelKind::Opposite: {
      Element pi{inner_->tag(), p.rep}, qi{inner_->tag(), q.rep};
      return Element{tag_, inner_->multiply(qi, pi).rep};
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Element> SemigroupModel::left_divide(const Element& p,
                                                   const Element& y) const {
  check_tag(p);
  check_tag(y);
  switch (kind_) {
    case ModelKind::FreeMonoid: {
      const auto &w = std::get<0>(p.rep), &v = std::get<0>(y.rep);
      if (w.size() > v.size() || !std::equal(w.begin(), w.end(), v.begin()))
        return std::nullopt;
      return Element{tag_, std::vector<std::int32_t>(v.begin() + static_cast<std::ptrdiff_t>(w.size()), v.end())};
    }
    case ModelKind::FreeAbelian: {
      const auto &w = std::get<1>(p.rep), &v = std::get<1>(y.rep);
      std::vector<std::int64_t> out(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (v[i] < w[i]) return std::nullopt;
        out[i] = v[i] - w[i];
      }
      return Element{tag_, std::move(out)};
    }
    case ModelKind::Numerical: {
      std::int64_t diff = std::get<2>(y.rep) - std::get<2>(p.rep);
      if (diff < 0 || !numerical_member(diff)) return std::nullopt;
      return Element{tag_, diff};
    }
    case ModelKind::Axb: {
      const auto &u = std::get<3>(p.rep), &v = std::get<3>(y.rep);
      auto a = re_div(ring_, v.a, u.a);
      auto b = re_div(ring_, re_sub(v.b, u.b), u.a);
      if (!a || !b) return std::nullopt;
      return Element{tag_, AxbElem{*b, *a}};
    }
    case ModelKind::Opposite: {
      Element pi{inner_->tag(), p.rep}, yi{inner_->tag(), y.rep};
      auto x = inner_->right_divide(pi, yi);
      if (!x) return std::nullopt;
      return Element{tag_, x->rep};
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Element> SemigroupModel::right_divide(const Element& p,
                                                    const Element& y) const {
  check_tag(p);
  check_tag(y);
  switch (kind_) {
    case ModelKind::FreeMonoid: {
      const auto &w = std::get<0>(p.rep), &v = std::get<0>(y.rep);
      if (w.size() > v.size() ||
          !std::equal(w.begin(), w.end(), v.end() - static_cast<std::ptrdiff_t>(w.size())))
        return std::nullopt;
      return Element{tag_, std::vector<std::int32_t>(v.begin(), v.end() - static_cast<std::ptrdiff_t>(w.size()))};
    }
    case ModelKind::FreeAbelian:
    case ModelKind::Numerical:
      return left_divide(p, y);
    case ModelKind::Axb: {
      // (d, c)(pb, pa) = (d + c pb, c pa) = (yb, ya)
      const auto &u = std::get<3>(p.rep), &v = std::get<3>(y.rep);
      auto c = re_div(ring_, v.a, u.a);
      if (!c) return std::nullopt;
      RingElem d = re_sub(v.b, re_mul(ring_, *c, u.b));
      return Element{tag_, AxbElem{d, *c}};
    }
    case ModelKind::Opposite: {
      Element pi{inner_->tag(), p.rep}, yi{inner_->tag(), y.rep};
      auto x = inner_->left_divide(pi, yi);
      if (!x) return std::nullopt;
      return Element{tag_, x->rep};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Element> SemigroupModel::ball(int r) const {
  if (r < 0) throw std::invalid_argument("ball radius must be nonnegative");
  std::vector<Element> order{unit()};
  std::set<Element, ElemLess> seen{unit()};
  std::size_t level_begin = 0;
  for (int k = 0; k < r; ++k) {
    std::size_t level_end = order.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const Element& g : gens_) {
        Element prod = multiply(order[i], g);
        if (seen.insert(prod).second) order.push_back(prod);
      }
    level_begin = level_end;
    if (level_begin == order.size()) break;
  }
  return order;
}

CancellativityReport SemigroupModel::check_cancellativity_window(int radius) const {
  CancellativityReport rep;
  rep.radius = radius;
  auto b = ball(radius);
  for (const Element& p : b) {
    for (const Element& x : b)
      for (const Element& y : b) {
        if (x == y) continue;
        if (rep.left_ok && multiply(p, x) == multiply(p, y)) {
          rep.left_ok = false;
          rep.left_witness = {p, x, y};
        }
        if (rep.right_ok && multiply(x, p) == multiply(y, p)) {
          rep.right_ok = false;
          rep.right_witness = {p, x, y};
        }
        if (!rep.left_ok && !rep.right_ok) return rep;
      }
  }
  return rep;
}

std::string SemigroupModel::elem_to_string(const Element& e) const {
  check_tag(e);
  switch (kind_) {
    case ModelKind::FreeMonoid: {
      const auto& w = std::get<0>(e.rep);
      if (w.empty()) return "e";
      std::string s;
      for (auto i : w) {
        if (rank_ <= 26)
          s += static_cast<char>('a' + i);
        else
          s += (s.empty() ? "g" : ".g") + std::to_string(i);
      }
      return s;
    }
    case ModelKind::FreeAbelian: {
      const auto& v = std::get<1>(e.rep);
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    }
    case ModelKind::Numerical:
      return std::to_string(std::get<2>(e.rep));
    case ModelKind::Axb: {
      const auto& u = std::get<3>(e.rep);
      return "(" + re_to_string(ring_, u.b) + "," + re_to_string(ring_, u.a) + ")";
    }
    case ModelKind::Opposite:
      return inner_->elem_to_string(Element{inner_->tag(), e.rep});
  }
  throw std::logic_error("unreachable");
}

bool SemigroupModel::numerical_member(std::int64_t n) const {
  if (kind_ != ModelKind::Numerical)
    throw std::logic_error("numerical_member on non-numerical model");
  if (n < 0) return false;
  std::int64_t g1 = num_gens_[0];
  return apery_[n % g1] <= n;
}

Element SemigroupModel::word(std::vector<std::int32_t> w) const {
  for (auto i : w)
    if (i < 0 || i >= rank_) throw std::invalid_argument("generator index out of range");
  return Element{tag_, std::move(w)};
}

Element SemigroupModel::exps(std::vector<std::int64_t> v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw std::invalid_argument("exponent vector has wrong rank");
  return Element{tag_, std::move(v)};
}

Element SemigroupModel::number(std::int64_t n) const {
  if (!numerical_member(n)) throw std::invalid_argument("not a member of the semigroup");
  return Element{tag_, n};
}

Element SemigroupModel::affine(RingElem b, RingElem a) const {
  if (a.is_zero()) throw std::invalid_argument("ax+b element needs a != 0");
  return Element{tag_, AxbElem{std::move(b), std::move(a)}};
}

Element SemigroupModel::wrap(Element inner_elem) const {
  if (kind_ != ModelKind::Opposite) throw std::logic_error("wrap on non-opposite model");
  inner_->check_tag(inner_elem);
  return Element{tag_, std::move(inner_elem.rep)};
}

}  // namespace sgl
