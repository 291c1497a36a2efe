#include "quadtower/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace quadtower {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view s) {
  std::string t(s);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty() || t == "-") throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  for (std::size_t i = (t.front() == '-') ? 1 : 0; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  return Integer(t);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (Integer p = 5; p * p <= m; p += 6) {
    strip(p);
    Integer q = p + 2;
    strip(q);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero");
  Integer s = sgn(n);
  for (const auto& [p, e] : factor_integer(n))
    if (e % 2) s *= p;
  return s;
}

Integer squarefree_part(const Rational& r) {
  if (r == 0) throw std::invalid_argument("squarefree_part: zero");
  return squarefree_part(Integer(r.get_num() * r.get_den()));
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return Integer(sqrt(n));
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  auto a = exact_sqrt(r.get_num());
  if (!a) return std::nullopt;
  auto b = exact_sqrt(r.get_den());
  if (!b) return std::nullopt;
  return make_rational(*a, *b);
}

std::optional<Rational> exact_fourth_root(const Rational& r) {
  auto s = exact_sqrt(r);
  if (!s) return std::nullopt;
  return exact_sqrt(*s);
}

int valuation(const Rational& r, const Integer& p) {
  if (r == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  Integer n = r.get_num();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  Integer d = r.get_den();
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    d /= p;
    --v;
  }
  return v;
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::string prime_label(const Integer& p) { return "p:" + p.get_str(); }

SquareClassVector rational_square_class(const Rational& r) {
  SquareClassVector v;
  const Integer s = squarefree_part(r);
  if (s < 0) v.toggle(std::string(kSignLabel));
  for (const auto& [p, e] : factor_integer(s))
    if (e % 2) v.toggle(prime_label(p));
  return v;
}

bool is_square(const Rational& r) {
  if (r == 0) throw std::invalid_argument("is_square: zero input");
  return exact_sqrt(r).has_value();
}

std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r == 0) throw std::invalid_argument("sqrt_exact: zero input");
  return exact_sqrt(r);
}

bool is_sum_of_two_squares(const Rational& a) {
  if (a == 0) throw std::invalid_argument("is_sum_of_two_squares: zero input");
  if (a < 0) return false;
  // a ~ num*den modulo squares; the two-squares theorem on that integer.
  for (const auto& [p, e] : factor_integer(Integer(a.get_num() * a.get_den())))
    if (p % 4 == 3 && e % 2) return false;
  return true;
}

}  // namespace quadtower
