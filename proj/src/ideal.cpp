#include "sgl/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgl {

namespace {

// Columns of the multiplication-by-m matrix on coordinates over {1, w}.
void mult_matrix(const RingDescriptor& ring, const RingElem& m, BigInt out[2][2]) {
  BigInt t = ring.omega_trace(), n = ring.omega_norm();
  out[0][0] = m.x;
  out[1][0] = m.y;
  out[0][1] = -m.y * n;
  out[1][1] = m.x + m.y * t;
}

std::vector<std::pair<BigInt, BigInt>> lat_basis(const Lat2& l) {
  return {{l.a, BigInt(0)}, {l.b, l.c}};
}

bool omega_closed(const RingDescriptor& ring, const Lat2& l) {
  RingElem w{BigInt(0), BigInt(1)};
  RingElem v1 = re_mul(ring, w, RingElem{l.a, BigInt(0)});
  RingElem v2 = re_mul(ring, w, RingElem{l.b, l.c});
  return lat_contains(l, v1.x, v1.y) && lat_contains(l, v2.x, v2.y);
}

}  // namespace

RingIdeal RingIdeal::unit(const RingDescriptor& ring) {
  RingIdeal i;
  i.ring_ = ring;
  i.n_ = 1;
  i.lat_ = Lat2{1, 0, 1};
  return i;
}

RingIdeal RingIdeal::of_integer(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("zero ideal is not supported");
  RingIdeal i;
  i.n_ = big_abs(n);
  return i;
}

RingIdeal RingIdeal::from_lattice(const RingDescriptor& ring, const Lat2& lat) {
  if (ring.is_z()) throw std::invalid_argument("from_lattice needs a quadratic ring");
  if (!omega_closed(ring, lat))
    throw std::invalid_argument("lattice is not an ideal (not closed under w)");
  RingIdeal i;
  i.ring_ = ring;
  i.lat_ = lat;
  return i;
}

RingIdeal RingIdeal::from_generators(const RingDescriptor& ring,
                                     const std::vector<RingElem>& gens) {
  if (ring.is_z()) {
    BigInt g = 0;
    for (const auto& e : gens) g = big_gcd(g, e.x);
    return of_integer(g);
  }
  // The Z-module generated by {g, w g} is the ideal generated by g.
  RingElem w{BigInt(0), BigInt(1)};
  std::vector<std::pair<BigInt, BigInt>> vecs;
  for (const auto& g : gens) {
    RingElem wg = re_mul(ring, w, g);
    vecs.push_back({g.x, g.y});
    vecs.push_back({wg.x, wg.y});
  }
  return from_lattice(ring, lat_from_generators(vecs));
}

RingIdeal RingIdeal::principal(const RingDescriptor& ring, const RingElem& g) {
  if (g.is_zero()) throw std::invalid_argument("zero ideal is not supported");
  return from_generators(ring, {g});
}

BigInt RingIdeal::norm() const {
  return ring_.is_z() ? n_ : lat_det(lat_);
}

bool RingIdeal::is_unit() const { return norm() == 1; }

bool RingIdeal::contains(const RingElem& x) const {
  if (ring_.is_z()) return floor_mod(x.x, n_) == 0;
  return lat_contains(lat_, x.x, x.y);
}

bool RingIdeal::subset_of(const RingIdeal& other) const {
  if (ring_ != other.ring_) throw std::invalid_argument("ring mismatch");
  if (ring_.is_z()) return n_ % other.n_ == 0;
  return lat_subset(lat_, other.lat_);
}

std::string RingIdeal::to_string() const {
  if (ring_.is_z()) return n_.str() + "Z";
  std::string second = re_to_string(ring_, RingElem{lat_.b, lat_.c});
  return "(" + lat_.a.str() + ", " + second + ")";
}

int ideal_cmp(const RingIdeal& i, const RingIdeal& j) {
  if (i.ring().is_z()) {
    if (i.z_modulus() != j.z_modulus()) return i.z_modulus() < j.z_modulus() ? -1 : 1;
    return 0;
  }
  const Lat2 &a = i.lattice(), &b = j.lattice();
  if (a.a != b.a) return a.a < b.a ? -1 : 1;
  if (a.c != b.c) return a.c < b.c ? -1 : 1;
  if (a.b != b.b) return a.b < b.b ? -1 : 1;
  return 0;
}

namespace {

void require_same_ring(const RingIdeal& i, const RingIdeal& j) {
  if (i.ring() != j.ring()) throw std::invalid_argument("ring mismatch");
}

}  // namespace

RingIdeal ideal_product(const RingIdeal& i, const RingIdeal& j) {
  require_same_ring(i, j);
  if (i.ring().is_z()) return RingIdeal::of_integer(i.z_modulus() * j.z_modulus());
  std::vector<std::pair<BigInt, BigInt>> vecs;
  for (const auto& [ux, uy] : lat_basis(i.lattice()))
    for (const auto& [vx, vy] : lat_basis(j.lattice())) {
      RingElem p = re_mul(i.ring(), RingElem{ux, uy}, RingElem{vx, vy});
      vecs.push_back({p.x, p.y});
    }
  return RingIdeal::from_lattice(i.ring(), lat_from_generators(vecs));
}

RingIdeal ideal_intersect(const RingIdeal& i, const RingIdeal& j) {
  require_same_ring(i, j);
  if (i.ring().is_z())
    return RingIdeal::of_integer(big_lcm(i.z_modulus(), j.z_modulus()));
  return RingIdeal::from_lattice(i.ring(), lat_intersect(i.lattice(), j.lattice()));
}

RingIdeal ideal_sum(const RingIdeal& i, const RingIdeal& j) {
  require_same_ring(i, j);
  if (i.ring().is_z())
    return RingIdeal::of_integer(big_gcd(i.z_modulus(), j.z_modulus()));
  auto vecs = lat_basis(i.lattice());
  for (const auto& v : lat_basis(j.lattice())) vecs.push_back(v);
  return RingIdeal::from_lattice(i.ring(), lat_from_generators(vecs));
}

BigInt ideal_norm(const RingIdeal& i) { return i.norm(); }

RingIdeal elem_mult_ideal(const RingElem& alpha, const RingIdeal& i) {
  if (alpha.is_zero()) throw std::invalid_argument("multiplier must be nonzero");
  if (i.ring().is_z()) return RingIdeal::of_integer(alpha.x * i.z_modulus());
  std::vector<std::pair<BigInt, BigInt>> vecs;
  for (const auto& [vx, vy] : lat_basis(i.lattice())) {
    RingElem p = re_mul(i.ring(), alpha, RingElem{vx, vy});
    vecs.push_back({p.x, p.y});
  }
  return RingIdeal::from_lattice(i.ring(), lat_from_generators(vecs));
}

RingIdeal elem_preimage_ideal(const RingElem& alpha, const RingIdeal& i) {
  if (alpha.is_zero()) throw std::invalid_argument("multiplier must be nonzero");
  if (i.ring().is_z()) {
    BigInt g = big_gcd(alpha.x, i.z_modulus());
    return RingIdeal::of_integer(i.z_modulus() / g);
  }
  // { v : M v in L } via the kernel of [M | -B].
  BigInt m[2][2];
  mult_matrix(i.ring(), alpha, m);
  const Lat2& l = i.lattice();
  IntMat a = {{m[0][0], m[0][1], -l.a, -l.b}, {m[1][0], m[1][1], BigInt(0), -l.c}};
  auto ker = int_kernel(a);
  std::vector<std::pair<BigInt, BigInt>> vecs;
  for (const auto& k : ker) vecs.push_back({k[0], k[1]});
  return RingIdeal::from_lattice(i.ring(), lat_from_generators(vecs));
}

RingElem canonical_residue(const RingElem& b, const RingIdeal& i) {
  if (i.ring().is_z()) return RingElem{floor_mod(b.x, i.z_modulus()), BigInt(0)};
  const Lat2& l = i.lattice();
  BigInt y = floor_mod(b.y, l.c);
  BigInt k = (b.y - y) / l.c;
  BigInt x = floor_mod(b.x - k * l.b, l.a);
  return RingElem{x, y};
}

std::optional<RingElem> coset_solve(const RingElem& alpha, const RingElem& r,
                                    const RingIdeal& i) {
  if (i.ring().is_z()) {
    BigInt s, t;
    BigInt g = ext_gcd(alpha.x, i.z_modulus(), s, t);
    if (floor_mod(r.x, g) != 0) return std::nullopt;
    return RingElem{floor_mod((r.x / g) * s, i.z_modulus()), BigInt(0)};
  }
  BigInt m[2][2];
  mult_matrix(i.ring(), alpha, m);
  const Lat2& l = i.lattice();
  IntMat a = {{m[0][0], m[0][1], l.a, l.b}, {m[1][0], m[1][1], BigInt(0), l.c}};
  auto w = int_solve(a, {r.x, r.y});
  if (!w) return std::nullopt;
  return RingElem{(*w)[0], (*w)[1]};
}

std::optional<RingElem> coset_intersect_rep(const RingElem& b1, const RingIdeal& i1,
                                            const RingElem& b2, const RingIdeal& i2) {
  require_same_ring(i1, i2);
  if (i1.ring().is_z()) {
    auto x = crt_int(floor_mod(b1.x, i1.z_modulus()), i1.z_modulus(),
                     floor_mod(b2.x, i2.z_modulus()), i2.z_modulus());
    if (!x) return std::nullopt;
    return RingElem{*x, BigInt(0)};
  }
  // b1 + u = b2 + v with u in I1, v in I2.
  const Lat2 &l1 = i1.lattice(), &l2 = i2.lattice();
  IntMat a = {{l1.a, l1.b, -l2.a, -l2.b}, {BigInt(0), l1.c, BigInt(0), -l2.c}};
  RingElem target = re_sub(b2, b1);
  auto w = int_solve(a, {target.x, target.y});
  if (!w) return std::nullopt;
  RingElem u{l1.a * (*w)[0] + l1.b * (*w)[1], l1.c * (*w)[1]};
  return re_add(b1, u);
}

std::vector<RingElem> small_elements(const RingIdeal& i, int shells) {
  std::vector<RingElem> out;
  if (i.ring().is_z()) {
    for (int k = 1; k <= shells; ++k) {
      out.push_back(RingElem{i.z_modulus() * k, BigInt(0)});
      out.push_back(RingElem{-i.z_modulus() * k, BigInt(0)});
    }
    return out;
  }
  const Lat2& l = i.lattice();
  for (int s = 1; s <= shells; ++s) {
    std::vector<RingElem> shell;
    for (int alpha = -s; alpha <= s; ++alpha)
      for (int beta = -s; beta <= s; ++beta) {
        if (std::max(std::abs(alpha), std::abs(beta)) != s) continue;
        RingElem e{l.a * alpha + l.b * beta, l.c * beta};
        if (!e.is_zero()) shell.push_back(e);
      }
    std::sort(shell.begin(), shell.end(), [&](const RingElem& a, const RingElem& b) {
      BigInt na = big_abs(re_norm(i.ring(), a)), nb = big_abs(re_norm(i.ring(), b));
      if (na != nb) return na < nb;
      BigInt ax = big_abs(a.x), bx = big_abs(b.x);
      if (ax != bx) return ax < bx;
      BigInt ay = big_abs(a.y), by = big_abs(b.y);
      if (ay != by) return ay < by;
      if ((a.x <= 0) != (b.x <= 0)) return b.x <= 0;
      return b.y <= 0 && a.y > 0;
    });
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

namespace {

std::vector<BigInt> prime_divisors(BigInt n) {
  n = big_abs(n);
  std::vector<BigInt> ps;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
    if (p > 3000000) throw std::invalid_argument("norm too large to factor");
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Prime ideals of a quadratic ring above the rational prime p, via the roots
// of x^2 - T x + N mod p.
std::vector<RingIdeal> primes_above(const RingDescriptor& ring, const BigInt& p) {
  if (p > 2000000)
    throw std::invalid_argument("prime too large for splitting enumeration");
  BigInt t = ring.omega_trace(), n = ring.omega_norm();
  std::vector<BigInt> roots;
  for (BigInt x = 0; x < p; ++x)
    if (floor_mod(x * x - t * x + n, p) == 0) roots.push_back(x);
  if (roots.empty()) {
    // inert
    return {RingIdeal::principal(ring, RingElem{p, BigInt(0)})};
  }
  std::vector<RingIdeal> out;
  for (const BigInt& r : roots)
    out.push_back(RingIdeal::from_generators(
        ring, {RingElem{p, BigInt(0)}, RingElem{-r, BigInt(1)}}));
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  std::sort(out.begin(), out.end(),
            [](const RingIdeal& a, const RingIdeal& b) { return ideal_cmp(a, b) < 0; });
  return out;
}

}  // namespace

int valuation(const RingIdeal& i, const RingIdeal& prime) {
  int v = 0;
  RingIdeal power = prime;
  while (i.subset_of(power)) {
    ++v;
    power = ideal_product(power, prime);
    if (v > 256) throw std::logic_error("valuation runaway");
  }
  return v;
}

PrimeFactorization factor(const RingIdeal& i) {
  PrimeFactorization out;
  if (i.is_unit()) return out;
  if (i.ring().is_z()) {
    BigInt n = i.z_modulus();
    for (const BigInt& p : prime_divisors(n)) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({RingIdeal::of_integer(p), e});
    }
    return out;
  }
  for (const BigInt& p : prime_divisors(i.norm()))
    for (const RingIdeal& prime : primes_above(i.ring(), p)) {
      int v = valuation(i, prime);
      if (v > 0) out.push_back({prime, v});
    }
  RingIdeal check = RingIdeal::unit(i.ring());
  for (const auto& [prime, e] : out)
    for (int k = 0; k < e; ++k) check = ideal_product(check, prime);
  if (!(check == i)) throw std::logic_error("factorization failed to recompose");
  return out;
}

RingIdeal ideal_quotient_exact(const RingIdeal& i, const RingIdeal& j) {
  require_same_ring(i, j);
  if (!i.subset_of(j)) throw std::invalid_argument("quotient requires J | I");
  RingIdeal out = RingIdeal::unit(i.ring());
  for (const auto& [prime, e] : factor(i)) {
    int v = e - valuation(j, prime);
    for (int k = 0; k < v; ++k) out = ideal_product(out, prime);
  }
  if (!(ideal_product(out, j) == i)) throw std::logic_error("exact quotient failed");
  return out;
}

PrincipalityReport is_principal(const RingIdeal& i) {
  PrincipalityReport rep;
  if (i.ring().is_z()) {
    rep.principal = true;
    rep.generator = RingElem{i.z_modulus(), BigInt(0)};
    return rep;
  }
  const RingDescriptor& ring = i.ring();
  BigInt target = i.norm();
  BigInt t = ring.omega_trace(), n = ring.omega_norm();
  std::vector<RingElem> candidates;
  if (ring.d < 0) {
    // positive definite: N(x + yw) = (x + Ty/2)^2 + (|D|/4) y^2
    BigInt dd = big_abs(ring.discriminant());
    BigInt ybound = isqrt_floor(4 * target / dd) + 1;
    for (BigInt y = -ybound; y <= ybound; ++y) {
      // x^2 + T x y + (N y^2 - target) = 0
      BigInt disc = t * t * y * y - 4 * (n * y * y - target);
      if (disc < 0) continue;
      BigInt s = isqrt_floor(disc);
      if (s * s != disc) continue;
      for (const BigInt& s2 : std::vector<BigInt>{s, -s}) {
        BigInt num = -t * y + s2;
        if (floor_mod(num, BigInt(2)) != 0) continue;
        candidates.push_back(RingElem{num / 2, y});
        if (s == 0) break;
      }
    }
    rep.exhaustive = true;
    rep.search_bound = ybound;
  } else {
    // indefinite norm form: bounded box search, exhaustive only on success
    BigInt bound = 8 + 4 * isqrt_floor(target * (big_abs(n) + big_abs(t) + 2));
    rep.search_bound = bound;
    rep.exhaustive = false;
    for (BigInt x = -bound; x <= bound; ++x)
      for (BigInt y = -bound; y <= bound; ++y) {
        RingElem e{x, y};
        if (big_abs(re_norm(ring, e)) == target) candidates.push_back(e);
      }
  }
  std::sort(candidates.begin(), candidates.end(), [&](const RingElem& a, const RingElem& b) {
    BigInt ax = big_abs(a.x), bx = big_abs(b.x);
    if (ax != bx) return ax < bx;
    BigInt ay = big_abs(a.y), by = big_abs(b.y);
    if (ay != by) return ay < by;
    return re_cmp(b, a) < 0;
  });
  for (const RingElem& g : candidates) {
    if (g.is_zero()) continue;
    if (i.contains(g) && RingIdeal::principal(ring, g) == i) {
      rep.principal = true;
      rep.generator = g;
      rep.exhaustive = true;
      return rep;
    }
  }
  rep.principal = false;
  return rep;
}

RingElem crt_solve(const std::vector<std::pair<RingIdeal, RingElem>>& congruences) {
  if (congruences.empty()) throw std::invalid_argument("empty congruence system");
  RingIdeal mod = congruences[0].first;
  RingElem x = canonical_residue(congruences[0].second, mod);
  for (std::size_t k = 1; k < congruences.size(); ++k) {
    const RingIdeal& nmod = congruences[k].first;
    const RingElem& target = congruences[k].second;
    if (!ideal_sum(mod, nmod).is_unit())
      throw std::invalid_argument("crt moduli are not coprime");
    // m + n = 1 with m in mod, n in nmod
    std::optional<RingElem> m;
    if (mod.ring().is_z()) {
      BigInt s, t;
      ext_gcd(mod.z_modulus(), nmod.z_modulus(), s, t);
      m = RingElem{s * mod.z_modulus(), BigInt(0)};
    } else {
      const Lat2 &l1 = mod.lattice(), &l2 = nmod.lattice();
      IntMat a = {{l1.a, l1.b, l2.a, l2.b}, {BigInt(0), l1.c, BigInt(0), l2.c}};
      auto w = int_solve(a, {BigInt(1), BigInt(0)});
      if (!w) throw std::logic_error("crt: unit not reachable");
      m = RingElem{l1.a * (*w)[0] + l1.b * (*w)[1], l1.c * (*w)[1]};
    }
    RingElem n = re_sub(RingElem{BigInt(1), BigInt(0)}, *m);
    // x' = x * n + target * m
    RingElem xn = mod.ring().is_z() ? RingElem{x.x * n.x, BigInt(0)}
                                    : re_mul(mod.ring(), x, n);
    RingElem tm = mod.ring().is_z() ? RingElem{target.x * m->x, BigInt(0)}
                                    : re_mul(mod.ring(), target, *m);
    mod = ideal_product(mod, nmod);
    x = canonical_residue(re_add(xn, tm), mod);
  }
  return x;
}

std::optional<RingElem> strong_approx_witness(const RingIdeal& i,
                                              const std::vector<RingIdeal>& subideals) {
  for (const RingIdeal& j : subideals) {
    if (!j.subset_of(i))
      throw std::invalid_argument("strong_approx_witness: subideal not contained");
    if (j == i) return std::nullopt;
  }
  auto good = [&](const RingElem& x) {
    if (!i.contains(x)) return false;
    for (const RingIdeal& j : subideals)
      if (j.contains(x)) return false;
    return true;
  };
  // Small elements first; the CRT construction below is the total fallback.
  for (const RingElem& x : small_elements(i, 24))
    if (good(x)) return x;
  // CRT over the conditions of the containing ideal's factorization:
  // exact valuation at every prime of I, a unit at the extra primes of the
  // subideals.
  std::vector<std::pair<RingIdeal, RingElem>> conds;
  PrimeFactorization fi = factor(i);
  for (const auto& [prime, e] : fi) {
    RingIdeal pe = RingIdeal::unit(i.ring());
    for (int k = 0; k < e; ++k) pe = ideal_product(pe, prime);
    RingIdeal pe1 = ideal_product(pe, prime);
    RingElem s;
    bool found = false;
    for (const RingElem& cand : small_elements(pe, 24))
      if (!pe1.contains(cand)) {
        s = cand;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("no residue between prime powers");
    conds.push_back({pe1, s});
  }
  std::vector<RingIdeal> extras;
  for (const RingIdeal& j : subideals)
    for (const auto& [prime, e] : factor(j)) {
      if (valuation(i, prime) > 0) continue;
      bool seen = false;
      for (const RingIdeal& q : extras)
        if (q == prime) seen = true;
      if (!seen) extras.push_back(prime);
    }
  for (const RingIdeal& q : extras)
    conds.push_back({q, RingElem{BigInt(1), BigInt(0)}});
  RingElem x = crt_solve(conds);
  if (!good(x)) throw std::logic_error("strong approximation witness failed to verify");
  return x;
}

FracRep fractional_representation(const RingIdeal& i) {
  if (i.ring().is_z())
    return FracRep{RingElem{i.z_modulus(), BigInt(0)}, RingElem{BigInt(1), BigInt(0)}};
  const RingDescriptor& ring = i.ring();
  PrimeFactorization fi = factor(i);
  const int kShellCap = 40;
  // a in I with exact valuation at every prime of I; the cofactor aR / I is
  // then coprime to all of them.
  std::optional<RingElem> a;
  for (const RingElem& cand : small_elements(i, kShellCap)) {
    bool ok = true;
    RingIdeal ar = RingIdeal::principal(ring, cand);
    for (const auto& [prime, e] : fi)
      if (valuation(ar, prime) != e) {
        ok = false;
        break;
      }
    if (ok) {
      a = cand;
      break;
    }
  }
  if (!a)
    throw SearchBudgetExhausted("fractional_representation: no admissible a within " +
                                std::to_string(kShellCap) + " shells");
  RingIdeal ia = ideal_quotient_exact(RingIdeal::principal(ring, *a), i);
  RingElem c{BigInt(1), BigInt(0)};
  if (!ia.is_unit()) {
    PrimeFactorization fa = factor(ia);
    std::optional<RingElem> cfound;
    for (const RingElem& cand : small_elements(ia, kShellCap)) {
      RingIdeal cr = RingIdeal::principal(ring, cand);
      bool ok = true;
      for (const auto& [prime, e] : fa)
        if (valuation(cr, prime) != e) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto& [prime, e] : fi)
          if (valuation(cr, prime) != 0) {
            ok = false;
            break;
          }
      if (ok) {
        cfound = cand;
        break;
      }
    }
    if (!cfound)
      throw SearchBudgetExhausted("fractional_representation: no admissible c within " +
                                  std::to_string(kShellCap) + " shells");
    c = *cfound;
  }
  RingIdeal preim = elem_preimage_ideal(c, RingIdeal::principal(ring, *a));
  if (!(preim == i))
    throw std::logic_error("fractional representation failed verification");
  return FracRep{*a, c};
}

FlatnessReport check_flatness_conditions(const RingDescriptor& from,
                                         const RingDescriptor& into,
                                         const std::vector<RingIdeal>& test_ideals) {
  FlatnessReport rep;
  const bool identity = from == into;
  if (!identity && !(from.is_z() && !into.is_z()))
    throw std::invalid_argument("unsupported ring pair for flatness check");
  auto extend = [&](const RingIdeal& i) {
    if (identity) return i;
    return elem_mult_ideal(RingElem{i.z_modulus(), BigInt(0)}, RingIdeal::unit(into));
  };
  auto restrict_to_z = [&](const RingIdeal& s) {
    // { x in Z : x * 1 in S } = a * Z for the HNF first basis entry.
    return RingIdeal::of_integer(s.lattice().a);
  };
  for (std::size_t u = 0; u < test_ideals.size(); ++u)
    for (std::size_t v = u; v < test_ideals.size(); ++v) {
      FlatnessCase cse;
      cse.i = test_ideals[u];
      cse.j = test_ideals[v];
      RingIdeal is = extend(cse.i), js = extend(cse.j);
      if (identity) {
        cse.extension_ok = true;
        cse.intersection_ok =
            ideal_intersect(is, js) == extend(ideal_intersect(cse.i, cse.j));
      } else {
        cse.extension_ok = restrict_to_z(is) == cse.i;
        cse.intersection_ok =
            ideal_intersect(is, js) == extend(ideal_intersect(cse.i, cse.j));
      }
      rep.all_ok = rep.all_ok && cse.extension_ok && cse.intersection_ok;
      rep.cases.push_back(cse);
    }
  return rep;
}

RingIdeal parse_ideal(const RingDescriptor& ring, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty ideal literal");
  if (s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced ideal literal");
    std::string body = s.substr(1, s.size() - 2);
    std::vector<RingElem> gens;
    std::size_t pos = 0;
    int depth = 0;
    std::string cur;
    for (char ch : body) {
      (void)pos;
      if (ch == ',' && depth == 0) {
        gens.push_back(re_parse(ring, cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) gens.push_back(re_parse(ring, cur));
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    return RingIdeal::from_generators(ring, gens);
  }
  if (s.back() == 'Z') {
    if (!ring.is_z()) throw std::invalid_argument("nZ literal needs ring Z");
    return RingIdeal::of_integer(BigInt(s.substr(0, s.size() - 1)));
  }
  throw std::invalid_argument("cannot parse ideal literal: " + text);
}

}  // namespace sgl
