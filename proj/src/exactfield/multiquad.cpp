#include "quadtower/multiquad.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace quadtower {

MultiquadFieldPtr MultiquadField::make(std::vector<Integer> generators) {
  if (generators.size() > kMaxMultiquadRank)
    throw std::invalid_argument("multiquadratic field limited to 3 generators");
  SquareClassSpace classes;
  for (const auto& a : generators) {
    if (a == 0 || a == 1) throw std::invalid_argument("generator must be a nonsquare integer");
    if (squarefree_part(a) != a)
      throw std::invalid_argument("generator " + a.get_str() + " is not squarefree");
    auto [next, flag] = insert_and_test_independent(classes, rational_square_class(Rational(a)));
    if (flag == Independence::dependent)
      throw std::invalid_argument("generator " + a.get_str() + " is dependent on the others");
    classes = std::move(next);
  }
  return MultiquadFieldPtr(new MultiquadField(std::move(generators)));
}

MultiquadFieldPtr MultiquadField::rationals() {
  static const MultiquadFieldPtr q(new MultiquadField({}));
  return q;
}

std::string MultiquadField::to_string() const {
  if (gens_.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += "sqrt " + gens_[i].get_str();
  }
  return s + ")";
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

}  // namespace

MultiquadFieldPtr parse_multiquad_field(std::string_view text) {
  std::string t = strip(text);
  if (t == "Q") return MultiquadField::rationals();
  if (t.size() < 3 || t[0] != 'Q' || t[1] != '(' || t.back() != ')')
    throw std::invalid_argument("malformed field descriptor: '" + t + "'");
  std::vector<Integer> gens;
  for (auto& item : split_top(std::string_view(t).substr(2, t.size() - 3), ',')) {
    if (item == "i") {
      gens.emplace_back(-1);
      continue;
    }
    if (item.rfind("sqrt", 0) != 0) throw std::invalid_argument("expected 'sqrt m' in '" + t + "'");
    std::string arg = strip(std::string_view(item).substr(4));
    if (!arg.empty() && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
    gens.push_back(parse_rational(arg).get_num());
  }
  return MultiquadField::make(std::move(gens));
}

MultiquadElement::MultiquadElement(MultiquadFieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("null field");
  if (coords_.size() != field_->degree())
    throw std::invalid_argument("coordinate count does not match field degree");
}

MultiquadElement MultiquadElement::from_rational(MultiquadFieldPtr field, const Rational& r) {
  std::vector<Rational> c(field->degree());
  c[0] = r;
  return MultiquadElement(std::move(field), std::move(c));
}

MultiquadElement MultiquadElement::basis(MultiquadFieldPtr field, unsigned mask) {
  std::vector<Rational> c(field->degree());
  c.at(mask) = 1;
  return MultiquadElement(std::move(field), std::move(c));
}

MultiquadElement MultiquadElement::root(MultiquadFieldPtr field, std::size_t i) {
  if (i >= field->rank()) throw std::out_of_range("generator index out of range");
  return basis(std::move(field), 1u << i);
}

bool MultiquadElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool MultiquadElement::is_rational() const {
  for (std::size_t m = 1; m < coords_.size(); ++m)
    if (coords_[m] != 0) return false;
  return true;
}

bool MultiquadElement::involves(std::size_t generator) const {
  for (std::size_t m = 0; m < coords_.size(); ++m)
    if ((m >> generator & 1) && coords_[m] != 0) return true;
  return false;
}

void MultiquadElement::check_same_field(const MultiquadElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw std::invalid_argument("elements of different fields: " + field_->to_string() + " vs " +
                                o.field_->to_string());
}

MultiquadElement MultiquadElement::operator-() const {
  MultiquadElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

MultiquadElement& MultiquadElement::operator+=(const MultiquadElement& o) {
  check_same_field(o);
  for (std::size_t m = 0; m < coords_.size(); ++m) coords_[m] += o.coords_[m];
  return *this;
}

MultiquadElement& MultiquadElement::operator-=(const MultiquadElement& o) {
  check_same_field(o);
  for (std::size_t m = 0; m < coords_.size(); ++m) coords_[m] -= o.coords_[m];
  return *this;
}

MultiquadElement& MultiquadElement::operator*=(const MultiquadElement& o) {
  check_same_field(o);
  const auto& gens = field_->generators();
  const std::size_t n = coords_.size();
  // prod_{i in S&T} a_i, cached per intersection mask
  std::vector<Integer> overlap(n, 1);
  for (std::size_t m = 1; m < n; ++m) {
    unsigned low = std::countr_zero(static_cast<unsigned>(m));
    overlap[m] = overlap[m & (m - 1)] * gens[low];
  }
  std::vector<Rational> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (coords_[s] == 0) continue;
    for (std::size_t t = 0; t < n; ++t) {
      if (o.coords_[t] == 0) continue;
      out[s ^ t] += coords_[s] * o.coords_[t] * overlap[s & t];
    }
  }
  coords_ = std::move(out);
  return *this;
}

MultiquadElement& MultiquadElement::operator*=(const Rational& r) {
  for (auto& c : coords_) c *= r;
  return *this;
}

MultiquadElement& MultiquadElement::operator/=(const MultiquadElement& o) {
  return *this *= o.inverse();
}

bool operator==(const MultiquadElement& a, const MultiquadElement& b) {
  return *a.field_ == *b.field_ && a.coords_ == b.coords_;
}

MultiquadElement MultiquadElement::conjugate(unsigned mask) const {
  MultiquadElement r = *this;
  for (std::size_t m = 0; m < coords_.size(); ++m)
    if (std::popcount(static_cast<unsigned>(m) & mask) % 2) r.coords_[m] = -r.coords_[m];
  return r;
}

MultiquadElement MultiquadElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // y_{i+1} = y_i * sigma_i(y_i) loses sqrt a_i; after d steps y is rational
  // and x * (product of the sigma_i(y_i)) = y.
  MultiquadElement y = *this;
  MultiquadElement acc = from_rational(field_, 1);
  for (std::size_t i = 0; i < field_->rank(); ++i) {
    MultiquadElement c = y.conjugate(1u << i);
    acc *= c;
    y *= c;
  }
  return acc * Rational(1 / y.coords_[0]);
}

std::string MultiquadElement::to_string() const {
  std::string s = "[";
  for (std::size_t m = 0; m < coords_.size(); ++m) {
    if (m) s += ", ";
    s += quadtower::to_string(coords_[m]);
  }
  return s + "]@" + field_->to_string();
}

MultiquadElement parse_multiquad_element(std::string_view text) {
  std::string t = strip(text);
  auto at = t.find('@');
  if (at == std::string::npos || t.front() != '[')
    throw std::invalid_argument("malformed element: '" + t + "'");
  std::string body = strip(std::string_view(t).substr(0, at));
  if (body.back() != ']') throw std::invalid_argument("malformed element: '" + t + "'");
  auto field = parse_multiquad_field(std::string_view(t).substr(at + 1));
  std::vector<Rational> coords;
  for (auto& c : split_top(std::string_view(body).substr(1, body.size() - 2), ','))
    coords.push_back(parse_rational(c));
  return MultiquadElement(field, std::move(coords));
}

namespace {

/// Splits x = u + v sqrt a_{k-1}; u and v only use masks below 2^(k-1).
std::pair<MultiquadElement, MultiquadElement> split(const MultiquadElement& x, std::size_t k) {
  const unsigned bit = 1u << (k - 1);
  std::vector<Rational> u(x.coords().size()), v(x.coords().size());
  for (unsigned m = 0; m < bit; ++m) {
    u[m] = x.coord(m);
    v[m] = x.coord(m | bit);
  }
  return {MultiquadElement(x.field(), std::move(u)), MultiquadElement(x.field(), std::move(v))};
}

/// Square root within Q(sqrt a_1, ..., sqrt a_k) of an element of that subfield.
std::optional<MultiquadElement> sqrt_in_level(const MultiquadElement& x, std::size_t k) {
  if (k == 0) {
    auto r = exact_sqrt(x.coord(0));
    if (!r) return std::nullopt;
    return MultiquadElement::from_rational(x.field(), *r);
  }
  const auto& field = x.field();
  const Rational a(field->generator(k - 1));
  const MultiquadElement e = MultiquadElement::root(field, k - 1);
  auto [u, v] = split(x, k);

  if (v.is_zero()) {
    if (auto r = sqrt_in_level(u, k - 1)) return r;
    // x = a t^2 has root t sqrt a
    if (auto r = sqrt_in_level(u * Rational(1 / a), k - 1)) return *r * e;
    return std::nullopt;
  }

  // (s + t sqrt a)^2 = (s^2 + a t^2) + 2st sqrt a, so u^2 - a v^2 = (s^2 - a t^2)^2
  // and (u +- n)/2 recovers s^2 for the right sign of n.
  auto n = sqrt_in_level(u * u - v * v * a, k - 1);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    MultiquadElement s2 = (u + *n * Rational(sign)) * Rational(1, 2);
    if (s2.is_zero()) continue;
    if (auto s = sqrt_in_level(s2, k - 1)) {
      MultiquadElement t = v / (*s * Rational(2));
      return *s + t * e;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MultiquadElement> sqrt_exact(const MultiquadElement& x) {
  if (x.is_zero()) throw std::invalid_argument("sqrt_exact: zero input");
  auto r = sqrt_in_level(x, x.field()->rank());
  if (!r) return std::nullopt;
  for (const auto& c : r->coords()) {
    if (c == 0) continue;
    if (c < 0) *r = -*r;
    break;
  }
  return r;
}

bool is_square(const MultiquadElement& x) {
  if (x.is_zero()) throw std::invalid_argument("is_square: zero input");
  return sqrt_in_level(x, x.field()->rank()).has_value();
}

std::vector<MultiquadElement> galois_orbit(const MultiquadElement& x) {
  std::vector<MultiquadElement> out;
  out.reserve(x.field()->degree());
  for (unsigned mask = 0; mask < x.field()->degree(); ++mask) out.push_back(x.conjugate(mask));
  return out;
}

MultiquadElement norm_to_subfield(const MultiquadElement& x, std::size_t i) {
  if (i >= x.field()->rank()) throw std::out_of_range("generator index out of range");
  return x * x.conjugate(1u << i);
}

Rational absolute_norm(const MultiquadElement& x) {
  MultiquadElement y = x;
  for (std::size_t i = 0; i < x.field()->rank(); ++i) y = norm_to_subfield(y, i);
  return y.coord(0);
}

}  // namespace quadtower
