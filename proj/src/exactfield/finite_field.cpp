#include "quadtower/finite_field.hpp"

#include <numeric>
#include <stdexcept>

namespace quadtower {

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

/// a * b mod (monic f) over F_p; inputs have degree < deg f.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  Poly prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    // x^k = x^(k-e) * x^e and x^e = -(f_0 + ... + f_{e-1} x^{e-1})
    for (std::size_t i = 0; i < e; ++i)
      prod[k - e + i] = (prod[k - e + i] + p - mulmod(c, f[i], p)) % p;
  }
  prod.resize(e);
  return prod;
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& f, std::uint64_t p) {
  Poly r(f.size() - 1, 0);
  r[0] = 1 % p;
  while (n) {
    if (n & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

/// True iff x has multiplicative order q - 1 modulo f, which forces f irreducible.
bool is_primitive(const Poly& f, std::uint64_t p, std::uint64_t q) {
  const std::size_t e = f.size() - 1;
  Poly x(e, 0);
  if (e == 1)
    x[0] = (p - f[0]) % p;
  else
    x[1] = 1;
  if (!is_one(poly_powmod(x, q - 1, f, p))) return false;
  for (const auto& [r, mult] : factor_integer(Integer(static_cast<unsigned long>(q - 1)))) {
    const std::uint64_t rr = r.get_ui();
    if (is_one(poly_powmod(x, (q - 1) / rr, f, p))) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned e) : p_(p), e_(e), q_(1) {
  for (unsigned i = 0; i < e; ++i) {
    if (q_ > kMaxFieldOrder / p) throw std::invalid_argument("finite field too large");
    q_ *= p;
  }
  // Lexicographic search over the low coefficients packed as a base-p number.
  for (std::uint64_t code = 0; code < q_; ++code) {
    Poly f(e + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[e] = 1;
    if (f[0] == 0) continue;
    if (is_primitive(f, p, q_)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw std::logic_error("no primitive polynomial found");
}

FiniteFieldPtr FiniteField::make(std::uint64_t p, unsigned e) {
  if (p == 2 || !is_prime(Integer(static_cast<unsigned long>(p))))
    throw std::invalid_argument("characteristic must be an odd prime");
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("characteristic too large");
  return FiniteFieldPtr(new FiniteField(p, e));
}

FiniteFieldPtr FiniteField::of_order(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("field order must be an odd prime power");
  if (q > kMaxBaseFieldOrder) throw std::invalid_argument("field order exceeds 10^4");
  auto fac = factor_integer(Integer(static_cast<unsigned long>(q)));
  if (fac.size() != 1) throw std::invalid_argument("field order must be a prime power");
  return make(fac[0].first.get_ui(), fac[0].second);
}

std::vector<std::uint64_t> FiniteField::digits(std::uint64_t a) const {
  std::vector<std::uint64_t> c(e_);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint64_t FiniteField::pack(const std::vector<std::uint64_t>& c) const {
  std::uint64_t v = 0;
  for (unsigned i = e_; i-- > 0;) v = v * p_ + c[i];
  return v;
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
  auto x = digits(a), y = digits(b);
  for (unsigned i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
  return pack(x);
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
  auto x = digits(a);
  for (auto& c : x) c = (p_ - c) % p_;
  return pack(x);
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
  if (e_ == 1) return mulmod(a, b, p_);
  return pack(poly_mulmod(digits(a), digits(b), modulus_, p_));
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t n) const {
  std::uint64_t r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

std::uint64_t FiniteField::generator() const {
  if (e_ == 1) return (p_ - modulus_[0]) % p_;
  return p_;  // digit vector (0, 1, 0, ...)
}

std::uint64_t FiniteField::from_integer(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r);
}

std::string FiniteField::format(std::uint64_t a) const {
  if (a == 0) return "0";
  auto c = digits(a);
  std::string s;
  for (unsigned i = 0; i < e_; ++i) {
    if (!c[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) s += std::to_string(c[i]) + "*";
    s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

FiniteFieldElement::FiniteFieldElement(FiniteFieldPtr field, std::uint64_t value)
    : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("null field");
  if (value_ >= field_->order()) throw std::invalid_argument("element encoding out of range");
}

FiniteFieldElement FiniteFieldElement::from_integer(FiniteFieldPtr field, std::int64_t n) {
  const auto v = field->from_integer(n);
  return FiniteFieldElement(std::move(field), v);
}

namespace {
void same_field(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  if (!(*a.field() == *b.field())) throw std::invalid_argument("elements of different finite fields");
}
}  // namespace

FiniteFieldElement FiniteFieldElement::operator-() const {
  return FiniteFieldElement(field_, field_->neg(value_));
}

FiniteFieldElement operator+(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  same_field(a, b);
  return FiniteFieldElement(a.field_, a.field_->add(a.value_, b.value_));
}

FiniteFieldElement operator-(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  same_field(a, b);
  return FiniteFieldElement(a.field_, a.field_->sub(a.value_, b.value_));
}

FiniteFieldElement operator*(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  same_field(a, b);
  return FiniteFieldElement(a.field_, a.field_->mul(a.value_, b.value_));
}

FiniteFieldElement operator/(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  return a * b.inverse();
}

FiniteFieldElement FiniteFieldElement::pow(std::uint64_t n) const {
  return FiniteFieldElement(field_, field_->pow(value_, n));
}

FiniteFieldElement FiniteFieldElement::inverse() const {
  return FiniteFieldElement(field_, field_->inv(value_));
}

bool is_square(const FiniteFieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("is_square: zero input");
  return x.pow((x.field()->order() - 1) / 2).value() == 1;
}

bool is_fourth_power(const FiniteFieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("is_fourth_power: zero input");
  const std::uint64_t m = x.field()->order() - 1;
  return x.pow(m / std::gcd(m, std::uint64_t{4})).value() == 1;
}

std::optional<FiniteFieldElement> sqrt_exact(const FiniteFieldElement& x) {
  if (!is_square(x)) return std::nullopt;
  const auto& f = x.field();
  const std::uint64_t q = f->order();
  // Tonelli-Shanks with q - 1 = 2^s * t
  std::uint64_t t = q - 1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  std::uint64_t z = 1;
  while (z < q && FiniteFieldElement(f, z).pow((q - 1) / 2).value() == 1) ++z;
  FiniteFieldElement c = FiniteFieldElement(f, z).pow(t);
  FiniteFieldElement r = x.pow((t + 1) / 2);
  FiniteFieldElement w = x.pow(t);
  unsigned m = s;
  while (w.value() != 1) {
    unsigned i = 0;
    FiniteFieldElement w2 = w;
    while (w2.value() != 1) {
      w2 = w2 * w2;
      ++i;
    }
    FiniteFieldElement b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b;
    r = r * b;
    c = b * b;
    w = w * c;
    m = i;
  }
  FiniteFieldElement other = -r;
  const bool r_sq = is_square(r), o_sq = is_square(other);
  if (r_sq != o_sq) return r_sq ? r : other;
  return r.value() <= other.value() ? r : other;
}

bool power2_irreducible(const Rational& a, unsigned n) {
  if (a == 0) throw std::invalid_argument("power2_irreducible: zero");
  if (n == 0) throw std::invalid_argument("power2_irreducible: n must be >= 1");
  if (is_square(a)) return false;
  if (n >= 2 && exact_fourth_root(Rational(-a / 4)).has_value()) return false;
  return true;
}

bool power2_irreducible(const FiniteFieldElement& a, unsigned n) {
  if (a.is_zero()) throw std::invalid_argument("power2_irreducible: zero");
  if (n == 0) throw std::invalid_argument("power2_irreducible: n must be >= 1");
  if (is_square(a)) return false;
  if (n >= 2) {
    const auto four = FiniteFieldElement::from_integer(a.field(), 4);
    if (is_fourth_power(-a / four)) return false;
  }
  return true;
}

}  // namespace quadtower
