#include <cctype>
#include <stdexcept>

#include "quadtower/funcfield.hpp"

namespace quadtower {

KPoly::KPoly(MultiquadFieldPtr k) : k_(std::move(k)) {}

KPoly::KPoly(MultiquadFieldPtr k, std::vector<MultiquadElement> coeffs)
    : k_(std::move(k)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(*c.field() == *k_)) throw std::invalid_argument("coefficient outside the constant field");
  trim();
}

KPoly KPoly::constant(const MultiquadElement& c) { return KPoly(c.field(), {c}); }

KPoly KPoly::constant(MultiquadFieldPtr k, const Rational& c) {
  auto e = MultiquadElement::from_rational(k, c);
  return KPoly(std::move(k), {std::move(e)});
}

KPoly KPoly::variable(MultiquadFieldPtr k) {
  auto zero = MultiquadElement::from_rational(k, 0);
  auto one = MultiquadElement::from_rational(k, 1);
  return KPoly(std::move(k), {std::move(zero), std::move(one)});
}

KPoly KPoly::linear(const MultiquadElement& root) {
  return KPoly(root.field(), {-root, MultiquadElement::from_rational(root.field(), 1)});
}

void KPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MultiquadElement KPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return MultiquadElement::from_rational(k_, 0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const MultiquadElement& KPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

KPoly KPoly::operator-() const {
  KPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<MultiquadElement> c;
  for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return KPoly(a.k_, std::move(c));
}

KPoly operator-(const KPoly& a, const KPoly& b) { return a + (-b); }

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return KPoly(a.k_);
  std::vector<MultiquadElement> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                                  MultiquadElement::from_rational(a.k_, 0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return KPoly(a.k_, std::move(c));
}

KPoly operator*(const KPoly& a, const MultiquadElement& c) {
  KPoly r = a;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

bool operator==(const KPoly& a, const KPoly& b) {
  return *a.k_ == *b.k_ && a.coeffs_ == b.coeffs_;
}

KPoly KPoly::pow(unsigned n) const {
  KPoly r = constant(k_, 1), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

MultiquadElement KPoly::eval(const MultiquadElement& x) const {
  MultiquadElement acc = MultiquadElement::from_rational(k_, 0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

KPoly KPoly::compose(const KPoly& g) const {
  KPoly acc(k_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

KPoly KPoly::monic() const { return *this * leading().inverse(); }

KPoly KPoly::conjugate(unsigned mask) const {
  KPoly r = *this;
  for (auto& c : r.coeffs_) c = c.conjugate(mask);
  return r;
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& k = a.field();
  const MultiquadElement lead_inv = b.leading().inverse();
  KPoly rem = a;
  std::vector<MultiquadElement> q(
      static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)),
      MultiquadElement::from_rational(k, 0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    MultiquadElement c = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = c;
    std::vector<MultiquadElement> mono(static_cast<std::size_t>(shift) + 1,
                                       MultiquadElement::from_rational(k, 0));
    mono.back() = c;
    KPoly sub = KPoly(k, std::move(mono)) * b;
    rem = rem - sub;
  }
  return {KPoly(k, std::move(q)), rem};
}

// -- text form --

namespace {

std::string generator_symbol(const Integer& g) {
  if (g == -1) return "i";
  return "sqrt(" + g.get_str() + ")";
}

std::string basis_symbol(const MultiquadField& k, unsigned mask) {
  std::string s;
  for (std::size_t i = 0; i < k.rank(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (!s.empty()) s += "*";
    s += generator_symbol(k.generator(i));
  }
  return s;
}

std::string monomial(int d) {
  if (d == 0) return "";
  if (d == 1) return "t";
  return "t^" + std::to_string(d);
}

/// |v| * symbol, with unit magnitudes elided when a symbol follows.
std::string scaled(const Rational& mag, const std::string& symbol) {
  if (symbol.empty()) return to_string(mag);
  if (mag == 1) return symbol;
  return to_string(mag) + "*" + symbol;
}

/// Sum of basis terms without outer sign handling, e.g. "1-i" or "-1/2+sqrt(2)".
std::string element_sum(const MultiquadElement& c) {
  std::string s;
  const auto& k = *c.field();
  for (unsigned m = 0; m < c.coords().size(); ++m) {
    const Rational& v = c.coord(m);
    if (v == 0) continue;
    const bool neg = v < 0;
    if (neg)
      s += "-";
    else if (!s.empty())
      s += "+";
    s += scaled(neg ? Rational(-v) : v, basis_symbol(k, m));
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string KPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int d = degree(); d >= 0; --d) {
    const auto& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    const bool first = s.empty();
    int nonzero = 0;
    unsigned only = 0;
    for (unsigned m = 0; m < c.coords().size(); ++m)
      if (c.coord(m) != 0) {
        ++nonzero;
        only = m;
      }
    const std::string mono = monomial(d);
    if (nonzero == 1) {
      const Rational& v = c.coord(only);
      const bool neg = v < 0;
      const Rational mag = neg ? Rational(-v) : v;
      std::string sym = basis_symbol(*k_, only);
      std::string body;
      if (d == 0) {
        body = scaled(mag, sym);
      } else if (sym.empty()) {
        body = mag == 1 ? mono : quadtower::to_string(mag) + "*" + mono;
      } else {
        body = scaled(mag, sym) + "*" + mono;
      }
      s += neg ? "-" : (first ? "" : "+");
      s += body;
    } else {
      if (!first) s += "+";
      s += "(" + element_sum(c) + ")";
      if (d > 0) s += "*" + mono;
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, MultiquadFieldPtr k) : s_(text), k_(std::move(k)) {}

  KPoly parse() {
    KPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'i' || c == 's' ||
           c == '(';
  }

  KPoly expr() {
    KPoly acc(k_);
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
    KPoly first = term();
    acc = neg ? -first : first;
    while (peek() == '+' || peek() == '-') {
      const bool minus = s_[pos_++] == '-';
      KPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  KPoly term() {
    KPoly f = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        f = f * factor();
      } else if (starts_atom()) {
        f = f * factor();
      } else {
        return f;
      }
    }
  }

  KPoly factor() {
    KPoly a = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      a = a.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return a;
  }

  Integer integer_literal(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string lit(s_.substr(start, pos_ - start));
    if (lit.empty() || lit == "-" || lit == "+") fail("expected integer");
    if (lit.front() == '+') lit.erase(0, 1);
    return Integer(lit);
  }

  KPoly generator_root(const Integer& m) {
    for (std::size_t i = 0; i < k_->rank(); ++i)
      if (k_->generator(i) == m) return KPoly::constant(MultiquadElement::root(k_, i));
    fail("constant field " + k_->to_string() + " has no " + generator_symbol(m));
  }

  KPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      KPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal(false);
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer_literal(false);
      }
      return KPoly::constant(k_, make_rational(num, den));
    }
    if (c == 't') {
      ++pos_;
      return KPoly::variable(k_);
    }
    if (c == 'i') {
      ++pos_;
      return generator_root(Integer(-1));
    }
    if (s_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      Integer m = integer_literal(true);
      if (peek() != ')') fail("expected ')' after sqrt argument");
      ++pos_;
      return generator_root(m);
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  MultiquadFieldPtr k_;
};

}  // namespace

KPoly parse_kpoly(std::string_view text, MultiquadFieldPtr k) {
  return PolyParser(text, std::move(k)).parse();
}

}  // namespace quadtower
