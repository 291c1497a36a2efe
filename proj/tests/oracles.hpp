#pragma once

// Brute-force reference computations used by the unit and acceptance tests.
// None of them call into the code under test except for raw field and group
// arithmetic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "quadtower/exactfield.hpp"
#include "quadtower/twogroup.hpp"

namespace oracle {

using quadtower::FiniteField;
using quadtower::FiniteFieldPtr;
using quadtower::FiniteTwoGroup;

// -- local solvability --

/// Primitive solution of z^2 = a x^2 + b y^2 modulo p^k.
inline bool conic_solvable_mod(long a, long b, long p, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  const long am = ((a % m) + m) % m, bm = ((b % m) + m) % m;
  std::vector<char> any_root(m, 0), unit_root(m, 0);
  for (long z = 0; z < m; ++z) {
    any_root[z * z % m] = 1;
    if (z % p) unit_root[z * z % m] = 1;
  }
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      const long v = (am * (x * x % m) + bm * (y * y % m)) % m;
      if ((x % p || y % p) ? any_root[v] : unit_root[v]) return true;
    }
  return false;
}

/// (a,b)_p for squarefree integers by exhaustive search.
inline int hilbert_by_search(long a, long b, long p) {
  const bool divides = (a % p == 0) || (b % p == 0);
  const int k = p == 2 ? 7 : (divides ? 3 : 1);
  return conic_solvable_mod(a, b, p, k) ? 1 : -1;
}

inline int hilbert_real(long a, long b) { return (a < 0 && b < 0) ? -1 : 1; }

/// a = x^2 + y^2 over Q for a nonzero integer: x^2 + y^2 = a d^2 with small x, y, d.
inline bool sum_of_two_squares_search(long a) {
  for (long d = 1; d <= 10; ++d)
    for (long x = 0; x <= 50; ++x)
      for (long y = 0; y <= x; ++y)
        if (x * x + y * y == a * d * d && (x || y)) return true;
  return false;
}

// -- polynomials --

/// X^4 - a reducible over Z: an integer root or a factorization
/// (X^2 + bX + c)(X^2 - bX + d) with c d = -a.
inline bool x4_minus_a_reducible(long a) {
  for (long r = -100; r <= 100; ++r)
    if (r * r * r * r == a) return true;
  for (long c = -std::abs(a); c <= std::abs(a); ++c) {
    if (c == 0 || a % c != 0) continue;
    const long d = -a / c;
    for (long b = -20; b <= 20; ++b)
      if (c + d - b * b == 0 && b * (d - c) == 0) return true;
  }
  return false;
}

/// X^(2^n) - a over F_q has a monic factor of degree <= 2^(n-1); brute force for deg <= 2 factors (n <= 2).
inline bool binomial_has_small_factor(const FiniteFieldPtr& k, std::uint64_t a, unsigned n) {
  const unsigned deg = 1u << n;
  const std::uint64_t q = k->order();
  auto power = [&](std::uint64_t x, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = k->mul(r, x);
    return r;
  };
  for (std::uint64_t r = 0; r < q; ++r)
    if (power(r, deg) == a) return true;
  if (deg < 4) return false;
  // X^4 - a mod X^2 + bX + c
  for (std::uint64_t b = 0; b < q; ++b)
    for (std::uint64_t c = 0; c < q; ++c) {
      // reduce X^k successively: X^2 = -bX - c
      std::uint64_t u = 0, v = 1;  // X^j = u X + v, start j = 0
      for (unsigned j = 0; j < deg; ++j) {
        const std::uint64_t nu = k->sub(v, k->mul(u, b));
        const std::uint64_t nv = k->neg(k->mul(u, c));
        u = nu;
        v = nv;
      }
      if (u == 0 && v == a) return true;
    }
  return false;
}

/// Integer coefficients of prod_{m odd < 2^(k-1)} (X - 2 cos(m pi / 2^(k-1))), low degree first.
inline std::vector<long> real_cyclotomic_minpoly_numeric(unsigned k) {
  const unsigned half = 1u << (k - 1);
  std::vector<double> poly{1.0};
  for (unsigned m = 1; m < half; m += 2) {
    const double root = 2 * std::cos(m * std::numbers::pi / half);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<long> out;
  for (double c : poly) out.push_back(std::lround(c));
  return out;
}

// -- Witt ring of F_q by isometry enumeration --

struct WittOracle {
  std::size_t size;
  unsigned exponent;
};

inline WittOracle witt_by_isometry(std::uint64_t q) {
  const auto k = FiniteField::of_order(q);
  std::vector<std::uint64_t> units;
  for (std::uint64_t x = 1; x < q; ++x) units.push_back(x);
  auto val = [&](std::uint64_t a, std::uint64_t b, std::uint64_t x, std::uint64_t y) {
    return k->add(k->mul(a, k->mul(x, x)), k->mul(b, k->mul(y, y)));
  };
  auto isotropic2 = [&](std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::uint64_t y = 0; y < q; ++y)
        if ((x || y) && val(a, b, x, y) == 0) return true;
    return false;
  };
  auto isometric2 = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    for (std::uint64_t m11 = 0; m11 < q; ++m11)
      for (std::uint64_t m21 = 0; m21 < q; ++m21) {
        if (val(a, b, m11, m21) != c) continue;
        for (std::uint64_t m12 = 0; m12 < q; ++m12)
          for (std::uint64_t m22 = 0; m22 < q; ++m22) {
            if (k->sub(k->mul(m11, m22), k->mul(m12, m21)) == 0) continue;
            if (val(a, b, m12, m22) != d) continue;
            if (k->add(k->mul(a, k->mul(m11, m12)), k->mul(b, k->mul(m21, m22))) == 0) return true;
          }
      }
    return false;
  };
  // unary classes: <a> ~ <c> iff c = a m^2
  std::vector<std::uint64_t> unary;
  for (auto a : units) {
    bool seen = false;
    for (auto r : unary)
      for (auto m : units)
        if (k->mul(r, k->mul(m, m)) == a) seen = true;
    if (!seen) unary.push_back(a);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> binary;
  for (auto a : units)
    for (auto b : units) {
      if (isotropic2(a, b)) continue;
      bool seen = false;
      for (auto [c, d] : binary)
        if (isometric2(c, d, a, b)) seen = true;
      if (!seen) binary.emplace_back(a, b);
    }
  unsigned exponent = 1;
  auto order_of_binary = [&](std::uint64_t a, std::uint64_t b) -> unsigned {
    return isometric2(a, b, k->neg(a), k->neg(b)) ? 2 : 4;
  };
  for (auto u : unary) {
    const unsigned o = isotropic2(u, u) ? 2 : 2 * order_of_binary(u, u);
    exponent = std::max(exponent, o);
  }
  for (auto [a, b] : binary) exponent = std::max(exponent, order_of_binary(a, b));
  return {1 + unary.size() + binary.size(), exponent};
}

// -- groups by enumeration --

using Members = std::vector<bool>;

inline Members closure(const FiniteTwoGroup& g, Members s) {
  bool grown = true;
  s[0] = true;
  while (grown) {
    grown = false;
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y)
        if (s[x] && s[y]) {
          const auto z = g.mul(static_cast<quadtower::Element>(x), static_cast<quadtower::Element>(y));
          if (!s[z]) {
            s[z] = true;
            grown = true;
          }
        }
  }
  return s;
}

inline std::vector<Members> all_subgroups(const FiniteTwoGroup& g) {
  const std::size_t n = g.order();
  std::set<Members> seen;
  std::vector<Members> queue{closure(g, Members(n, false))};
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (queue[i][x]) continue;
      Members t = queue[i];
      t[x] = true;
      t = closure(g, t);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return queue;
}

inline std::size_t count(const Members& m) { return static_cast<std::size_t>(std::count(m.begin(), m.end(), true)); }

inline bool subset(const Members& a, const Members& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline Members intersect_all(const std::vector<Members>& sets, std::size_t n) {
  Members out(n, true);
  for (const auto& s : sets)
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] && s[i];
  return out;
}

/// Intersection of the maximal subgroups.
inline Members frattini(const FiniteTwoGroup& g) {
  const auto subs = all_subgroups(g);
  std::vector<Members> maximal;
  for (const auto& s : subs) {
    if (count(s) == g.order()) continue;
    bool is_max = true;
    for (const auto& t : subs)
      if (t != s && count(t) != g.order() && subset(s, t)) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  return intersect_all(maximal, g.order());
}

inline bool normal(const FiniteTwoGroup& g, const Members& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s[x])
      for (quadtower::Element y = 0; y < g.order(); ++y)
        if (!s[g.mul(g.mul(g.inv(y), static_cast<quadtower::Element>(x)), y)]) return false;
  return true;
}

/// Smallest normal N inside H with every h^2 and [h, g] in N.
inline Members series_step_by_search(const FiniteTwoGroup& g, const Members& h) {
  std::vector<Members> candidates;
  for (const auto& n : all_subgroups(g)) {
    if (!subset(n, h) || !normal(g, n)) continue;
    bool ok = true;
    for (quadtower::Element x = 0; x < g.order() && ok; ++x) {
      if (!h[x]) continue;
      if (!n[g.mul(x, x)]) ok = false;
      for (quadtower::Element y = 0; y < g.order() && ok; ++y)
        if (!n[g.commutator(x, y)]) ok = false;
    }
    if (ok) candidates.push_back(n);
  }
  return intersect_all(candidates, g.order());
}

inline Members center_by_search(const FiniteTwoGroup& g) {
  Members z(g.order(), false);
  for (quadtower::Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (quadtower::Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    z[x] = central;
  }
  return z;
}

inline unsigned exponent_by_powers(const FiniteTwoGroup& g) {
  unsigned e = 1;
  for (quadtower::Element x = 0; x < g.order(); ++x) {
    unsigned o = 1;
    for (auto y = x; y != 0; y = g.mul(y, x)) ++o;
    e = std::max(e, x == 0 ? 1u : o);
  }
  return e;
}

/// Length of the upper central series.
inline unsigned class_by_upper_series(const FiniteTwoGroup& g) {
  if (g.order() == 1) return 0;
  Members z(g.order(), false);
  z[0] = true;
  for (unsigned c = 1;; ++c) {
    Members next(g.order(), false);
    for (quadtower::Element x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (quadtower::Element y = 0; y < g.order() && ok; ++y)
        if (!z[g.commutator(x, y)]) ok = false;
      next[x] = ok;
    }
    if (count(next) == g.order()) return c;
    if (next == z) return 0;  // not nilpotent
    z = std::move(next);
  }
}

inline Members to_members(const quadtower::Subgroup& s, std::size_t n) {
  Members m(n, false);
  for (auto x : s.members()) m[x] = true;
  return m;
}

// -- quartic fields --

/// Q(sqrt(u + v sqrt d))/Q is Galois iff N = u^2 - d v^2 or d N is a square (v != 0).
inline bool quartic_is_galois(long u, long v, long d) {
  const long n = u * u - d * v * v;
  auto sq = [](long x) {
    if (x < 0) return false;
    const long r = std::lround(std::sqrt(static_cast<double>(x)));
    return r * r == x;
  };
  return sq(n) || sq(d * n);
}

}  // namespace oracle
