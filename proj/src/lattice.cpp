#include "sgl/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace sgl {

Lat2 lat_from_generators(const std::vector<std::pair<BigInt, BigInt>>& gens) {
  // Combine generators until a single vector carries the gcd of all
  // y-coordinates; the unimodular residual of each combination has y = 0.
  BigInt vx = 0, vy = 0;
  std::vector<BigInt> xs;
  for (const auto& [gx, gy] : gens) {
    if (gx == 0 && gy == 0) continue;
    if (gy == 0) {
      xs.push_back(gx);
      continue;
    }
    if (vy == 0) {
      vx = gx;
      vy = gy;
      continue;
    }
    BigInt s, t;
    BigInt g = ext_gcd(vy, gy, s, t);
    xs.push_back(vx * (gy / g) - gx * (vy / g));
    vx = s * vx + t * gx;
    vy = g;
  }
  if (vy == 0) throw std::invalid_argument("lattice generators have rank < 2");
  if (vy < 0) {
    vy = -vy;
    vx = -vx;
  }
  BigInt a = 0;
  for (const BigInt& x : xs) a = big_gcd(a, x);
  if (a == 0) throw std::invalid_argument("lattice generators have rank < 2");
  BigInt b = floor_mod(vx, a);
  return Lat2{a, b, vy};
}

bool lat_contains(const Lat2& l, const BigInt& x, const BigInt& y) {
  if (floor_mod(y, l.c) != 0) return false;
  BigInt k = y / l.c;
  return floor_mod(x - k * l.b, l.a) == 0;
}

bool lat_subset(const Lat2& inner, const Lat2& outer) {
  return lat_contains(outer, inner.a, 0) && lat_contains(outer, inner.b, inner.c);
}

std::optional<BigInt> crt_int(const BigInt& r1, const BigInt& m1,
                              const BigInt& r2, const BigInt& m2) {
  BigInt s, t;
  BigInt g = ext_gcd(m1, m2, s, t);
  BigInt diff = r2 - r1;
  if (floor_mod(diff, g) != 0) return std::nullopt;
  BigInt l = m1 / g * m2;
  BigInt x = r1 + m1 * floor_mod((diff / g) * s, m2 / g);
  return floor_mod(x, l);
}

Lat2 lat_intersect(const Lat2& l1, const Lat2& l2) {
  // (x, y) lies in both iff y = k * lcm(c1,c2) and x satisfies one congruence
  // per lattice; the two congruences are compatible exactly for k in k0 * Z.
  BigInt c = big_lcm(l1.c, l2.c);
  BigInt beta = (c / l1.c) * l1.b - (c / l2.c) * l2.b;
  BigInt g = big_gcd(l1.a, l2.a);
  BigInt k0 = g / big_gcd(floor_mod(beta, g), g);
  BigInt cn = c * k0;
  auto x0 = crt_int(floor_mod(k0 * (c / l1.c) * l1.b, l1.a), l1.a,
                    floor_mod(k0 * (c / l2.c) * l2.b, l2.a), l2.a);
  if (!x0) throw std::logic_error("lat_intersect: incompatible congruences");
  BigInt an = big_lcm(l1.a, l2.a);
  return Lat2{an, floor_mod(*x0, an), cn};
}

namespace {

// Column echelon with transform: a * u = h, pivots collected as (row, col).
std::vector<std::pair<int, int>> column_echelon(IntMat& h, IntMat& u) {
  const int rows = static_cast<int>(h.size());
  const int cols = rows ? static_cast<int>(h[0].size()) : 0;
  auto col_addmul = [&](int dst, int src, const BigInt& f) {
    for (int r = 0; r < rows; ++r) h[r][dst] += f * h[r][src];
    for (auto& row : u) row[dst] += f * row[src];
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(h[r][i], h[r][j]);
    for (auto& row : u) std::swap(row[i], row[j]);
  };
  auto col_neg = [&](int i) {
    for (int r = 0; r < rows; ++r) h[r][i] = -h[r][i];
    for (auto& row : u) row[i] = -row[i];
  };
  std::vector<std::pair<int, int>> pivots;
  int p = 0;
  for (int r = 0; r < rows && p < cols; ++r) {
    while (true) {
      int best = -1;
      for (int j = p; j < cols; ++j)
        if (h[r][j] != 0 && (best < 0 || big_abs(h[r][j]) < big_abs(h[r][best])))
          best = j;
      if (best < 0) break;
      if (best != p) col_swap(p, best);
      bool clean = true;
      for (int j = p + 1; j < cols; ++j) {
        if (h[r][j] == 0) continue;
        col_addmul(j, p, -(h[r][j] / h[r][p]));
        if (h[r][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[r][p] != 0) {
      if (h[r][p] < 0) col_neg(p);
      pivots.emplace_back(r, p);
      ++p;
    }
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<BigInt>> int_solve(const IntMat& a,
                                             const std::vector<BigInt>& t) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  IntMat h = a;
  IntMat u(cols, std::vector<BigInt>(cols, 0));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;
  auto pivots = column_echelon(h, u);
  std::vector<BigInt> y(cols, 0), rest = t;
  for (auto [r, j] : pivots) {
    if (floor_mod(rest[r], h[r][j]) != 0) return std::nullopt;
    y[j] = rest[r] / h[r][j];
    for (int rr = 0; rr < rows; ++rr) rest[rr] -= y[j] * h[rr][j];
  }
  for (int r = 0; r < rows; ++r)
    if (rest[r] != 0) return std::nullopt;
  std::vector<BigInt> w(cols, 0);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) w[i] += u[i][j] * y[j];
  return w;
}

std::vector<std::vector<BigInt>> int_kernel(const IntMat& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  IntMat h = a;
  IntMat u(cols, std::vector<BigInt>(cols, 0));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;
  auto pivots = column_echelon(h, u);
  int p = static_cast<int>(pivots.size());
  std::vector<std::vector<BigInt>> ker;
  for (int j = p; j < cols; ++j) {
    std::vector<BigInt> v(cols);
    for (int i = 0; i < cols; ++i) v[i] = u[i][j];
    ker.push_back(std::move(v));
  }
  return ker;
}

}  // namespace sgl
