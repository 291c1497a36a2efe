// Exact factorization of polynomials of degree <= 4 over Q, Q(i), Q(sqrt m).
//
// Roots in k are found through the norm N(f) = f * conj(f) in Q[t]: every
// root of f in k has a minimal polynomial over Q of degree 1 or 2 dividing
// N(f). Rational roots come from the rational root test, quadratic factors
// from a Kronecker search at t = 0 and t = 1. Quartics without roots are
// split (or proven irreducible) through Ferrari's resolvent cubic.

#include <algorithm>
#include <stdexcept>

#include "quadtower/funcfield.hpp"

namespace quadtower {

namespace {

using IntPoly = std::vector<Integer>;  // low degree first

/// Primitive integer polynomial proportional to a rational one.
IntPoly primitive_part(const std::vector<Rational>& p) {
  Integer lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly out;
  Integer g = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (lcm / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (g != 0)
    for (auto& c : out) c /= g;
  if (!out.empty() && out.back() < 0)
    for (auto& c : out) c = -c;
  return out;
}

Rational eval_int(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

/// Exact division in Q[t]; nullopt on nonzero remainder.
std::optional<std::vector<Rational>> exact_quotient(const std::vector<Rational>& a,
                                                    const std::vector<Rational>& b) {
  if (a.size() < b.size()) return std::nullopt;
  std::vector<Rational> rem = a, q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = rem[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return q;
}

std::vector<Rational> to_rational(const IntPoly& p) {
  return std::vector<Rational>(p.begin(), p.end());
}

std::vector<Rational> rational_roots(const IntPoly& p) {
  std::vector<Rational> roots;
  if (p.size() < 2) return roots;
  IntPoly work = p;
  if (work[0] == 0) {
    roots.emplace_back(0);
    std::size_t z = 0;
    while (work[z] == 0) ++z;
    work.erase(work.begin(), work.begin() + static_cast<long>(z));
    if (work.size() < 2) return roots;
  }
  for (const auto& num : positive_divisors(work.front()))
    for (const auto& den : positive_divisors(work.back()))
      for (int sign : {1, -1}) {
        Rational r = make_rational(num * sign, den);
        if (eval_int(work, r) == 0 &&
            std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  return roots;
}

/// Monic quadratic factors (t^2 + p t + q, as {q, p, 1}) of a primitive integer
/// polynomial without rational roots.
std::vector<std::vector<Rational>> quadratic_factors(const IntPoly& p) {
  std::vector<std::vector<Rational>> out;
  if (p.size() < 3) return out;
  const auto pr = to_rational(p);
  if (p.size() == 3) {
    out.push_back({Rational(p[0]) / p[2], Rational(p[1]) / p[2], Rational(1)});
    return out;
  }
  // Gauss: a factor c2 t^2 + c1 t + c0 in Z[t] has c2 | lead, c0 | p(0) and
  // c2 + c1 + c0 | p(1). Neither value vanishes since there are no rational roots.
  const Integer p0 = p.front();
  Integer p1 = 0;
  for (const auto& c : p) p1 += c;
  const auto lead_divs = positive_divisors(p.back());
  const auto c0_divs = positive_divisors(p0);
  const auto d1_divs = positive_divisors(p1);
  for (const auto& c2 : lead_divs)
    for (const auto& c0abs : c0_divs)
      for (int s0 : {1, -1})
        for (const auto& d1abs : d1_divs)
          for (int s1 : {1, -1}) {
            const Integer c0 = c0abs * s0;
            const Integer c1 = d1abs * s1 - c2 - c0;
            std::vector<Rational> g{Rational(c0) / c2, Rational(c1) / c2, Rational(1)};
            if (std::find(out.begin(), out.end(), g) != out.end()) continue;
            if (exact_quotient(pr, g)) out.push_back(std::move(g));
          }
  return out;
}

std::vector<Rational> norm_polynomial(const KPoly& f) {
  const auto& k = f.field();
  KPoly n = f;
  for (std::size_t i = 0; i < k->rank(); ++i) n = n * n.conjugate(1u << i);
  std::vector<Rational> out;
  for (const auto& c : n.coeffs()) {
    if (!c.is_rational()) throw std::logic_error("norm polynomial not rational");
    out.push_back(c.coord(0));
  }
  return out;
}

void add_root(std::vector<MultiquadElement>& roots, const MultiquadElement& r) {
  if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
}

/// (-p +- sqrt(p^2 - 4q)) / 2 when the discriminant is a square in k.
std::vector<MultiquadElement> quadratic_roots(const MultiquadFieldPtr& k, const MultiquadElement& p,
                                              const MultiquadElement& q) {
  MultiquadElement disc = p * p - q * Rational(4);
  if (disc.is_zero()) return {p * Rational(-1, 2)};
  auto s = sqrt_exact(disc);
  if (!s) return {};
  (void)k;
  return {(-p + *s) * Rational(1, 2), (-p - *s) * Rational(1, 2)};
}

}  // namespace

std::vector<MultiquadElement> roots_in_field(const KPoly& f) {
  const auto& k = f.field();
  if (k->rank() > 1) throw std::invalid_argument("root finding needs a constant field of degree <= 2");
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<MultiquadElement> roots;
  if (f.degree() < 1) return roots;

  IntPoly n = primitive_part(norm_polynomial(f));
  std::vector<Rational> nr = to_rational(n);
  for (const auto& r : rational_roots(n)) {
    auto x = MultiquadElement::from_rational(k, r);
    if (f.eval(x).is_zero()) add_root(roots, x);
    const std::vector<Rational> lin{-r, Rational(1)};
    while (auto q = exact_quotient(nr, lin)) nr = *q;
  }
  n = primitive_part(nr);
  for (const auto& g : quadratic_factors(n)) {
    auto p = MultiquadElement::from_rational(k, g[1]);
    auto q = MultiquadElement::from_rational(k, g[0]);
    for (const auto& x : quadratic_roots(k, p, q))
      if (f.eval(x).is_zero()) add_root(roots, x);
  }
  return roots;
}

namespace {

/// Splits a monic quartic without roots in k into two monic quadratics, if possible.
std::optional<std::pair<KPoly, KPoly>> split_quartic(const KPoly& f) {
  const auto& k = f.field();
  const MultiquadElement shift = f.coeff(3) * Rational(1, 4);
  const KPoly t = KPoly::variable(k);
  // depressed: g(y) = f(y - e3/4) = y^4 + p y^2 + q y + r
  const KPoly g = f.compose(t - KPoly::constant(shift));
  const MultiquadElement p = g.coeff(2), q = g.coeff(1), r = g.coeff(0);
  const KPoly back = t + KPoly::constant(shift);

  auto quad = [&](const MultiquadElement& b, const MultiquadElement& c) {
    return KPoly(k, {c, b, MultiquadElement::from_rational(k, 1)});
  };
  auto finish = [&](const KPoly& a, const KPoly& b) -> std::optional<std::pair<KPoly, KPoly>> {
    if (!(a * b == g)) throw std::logic_error("quartic split failed verification");
    return std::pair{a.compose(back), b.compose(back)};
  };
  const auto zero = MultiquadElement::from_rational(k, 0);

  if (q.is_zero()) {
    // y^4 + p y^2 + r = (y^2 - z1)(y^2 - z2)
    auto zs = quadratic_roots(k, p, r);
    if (!zs.empty()) {
      const MultiquadElement z1 = zs.front();
      const MultiquadElement z2 = zs.size() > 1 ? zs[1] : zs.front();
      return finish(quad(zero, -z1), quad(zero, -z2));
    }
    // (y^2 + u y + v)(y^2 - u y + v) with v^2 = r, u^2 = 2v - p
    if (auto v = sqrt_exact(r)) {
      for (const MultiquadElement& vv : {*v, -*v}) {
        MultiquadElement U = vv * Rational(2) - p;
        if (U.is_zero()) continue;
        if (auto u = sqrt_exact(U)) return finish(quad(*u, vv), quad(-*u, vv));
      }
    }
    return std::nullopt;
  }

  // Resolvent in U = u^2: U^3 + 2p U^2 + (p^2 - 4r) U - q^2.
  const KPoly resolvent(k, {-(q * q), p * p - r * Rational(4), p * Rational(2),
                            MultiquadElement::from_rational(k, 1)});
  for (const auto& U : roots_in_field(resolvent)) {
    if (U.is_zero()) continue;
    auto u = sqrt_exact(U);
    if (!u) continue;
    const MultiquadElement q_over_u = q / *u;
    const MultiquadElement v = (p + U - q_over_u) * Rational(1, 2);
    const MultiquadElement w = (p + U + q_over_u) * Rational(1, 2);
    return finish(quad(*u, v), quad(-*u, w));
  }
  return std::nullopt;
}

}  // namespace

FactoredRatFunc factor(const KPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  if (f.degree() > kMaxFactorDegree) throw std::invalid_argument("factor: degree exceeds 4");
  const auto& k = f.field();
  if (k->rank() > 1) throw std::invalid_argument("factor: constant field must have degree <= 2");

  const MultiquadElement constant = f.leading();
  KPoly g = f.monic();
  std::vector<IrreducibleFactor> factors;

  for (const auto& root : roots_in_field(g)) {
    const KPoly lin = KPoly::linear(root);
    int e = 0;
    while (g.degree() >= 1 && g.eval(root).is_zero()) {
      g = divmod(g, lin).first;
      ++e;
    }
    if (e) factors.push_back({lin, e});
  }

  if (g.degree() == 4) {
    if (auto split = split_quartic(g)) {
      factors.push_back({split->first, 1});
      factors.push_back({split->second, 1});
    } else {
      factors.push_back({g, 1});
    }
  } else if (g.degree() >= 1) {
    // no roots left, so a remaining quadratic or cubic is irreducible
    factors.push_back({g, 1});
  }
  return FactoredRatFunc(constant, std::move(factors));
}

}  // namespace quadtower
