#include "quadtower/symbols.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace quadtower {

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("place " + p.get_str() + " is not prime");
  Place v;
  v.p_ = p;
  return v;
}

Place parse_place(std::string_view text) {
  if (text == "real" || text == "inf") return Place::real();
  Integer p;
  if (text.empty() || p.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("bad place '" + std::string(text) + "'");
  return Place::prime(p);
}

namespace {

int sign_of_parity(unsigned long e) { return e % 2 ? -1 : 1; }

/// (x - 1)/2 mod 2 and (x^2 - 1)/8 mod 2 for odd x.
unsigned eps(const Integer& x) {
  Integer r = x % 4;
  if (r < 0) r += 4;
  return r == 3 ? 1 : 0;
}
unsigned omega(const Integer& x) {
  Integer r = x % 8;
  if (r < 0) r += 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

std::pair<int, Integer> split_power(const Integer& n, const Integer& p) {
  int e = 0;
  Integer u = n;
  while (u % p == 0) {
    u /= p;
    ++e;
  }
  return {e, u};
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
  const Integer x = squarefree_part(a), y = squarefree_part(b);
  if (v.is_real()) return (x < 0 && y < 0) ? -1 : 1;
  const Integer& p = v.p();
  auto [alpha, u] = split_power(x, p);
  auto [beta, w] = split_power(y, p);
  if (p == 2) {
    const unsigned e = eps(u) * eps(w) + static_cast<unsigned>(alpha) * omega(w) +
                       static_cast<unsigned>(beta) * omega(u);
    return sign_of_parity(e);
  }
  int s = 1;
  if (alpha && beta && eps(p)) s = -s;
  if (beta) s *= legendre(u, p);
  if (alpha) s *= legendre(w, p);
  return s;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  std::vector<Integer> primes{2};
  for (const Rational& r : {a, b})
    for (const Integer& n : {Integer(r.get_num()), Integer(r.get_den())})
      for (const auto& [p, e] : factor_integer(n))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  std::vector<Place> out{Place::real()};
  for (const auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

ProductCheck global_product_check(const Rational& a, const Rational& b) {
  ProductCheck out;
  for (const auto& v : relevant_places(a, b)) {
    const int s = hilbert_symbol(a, b, v);
    out.places.push_back({v, s});
    if (s < 0) out.nonsplit.push_back(v);
  }
  if (!out.even()) throw std::logic_error("product formula violated");
  return out;
}

bool embeds_in_c4(const Rational& a) {
  if (a == 0) throw std::invalid_argument("embeds_in_c4: zero");
  if (is_square(a)) throw std::invalid_argument("embeds_in_c4: square class is trivial");
  return is_sum_of_two_squares(a);
}

bool embeds_in_d4(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::invalid_argument("embeds_in_d4: zero");
  if (is_square(a) || is_square(b) || is_square(Rational(a * b)))
    throw std::invalid_argument("embeds_in_d4: not a biquadratic field");
  for (const auto& v : relevant_places(a, b))
    if (hilbert_symbol(a, b, v) < 0) return false;
  return true;
}

WittInvariants witt_invariants(const DiagonalForm<Rational>& form) {
  WittInvariants out{static_cast<unsigned>(form.dimension() % 2), 1, {}};
  Rational disc = 1;
  for (const auto& x : form.entries) {
    if (x == 0) throw std::invalid_argument("degenerate form");
    disc *= x;
  }
  out.discriminant = squarefree_part(disc);
  std::vector<Integer> primes{2};
  for (const auto& x : form.entries)
    for (const Integer& n : {Integer(x.get_num()), Integer(x.get_den())})
      for (const auto& [p, e] : factor_integer(n))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  std::vector<Place> places{Place::real()};
  for (const auto& p : primes) places.push_back(Place::prime(p));
  for (const auto& v : places) {
    int h = 1;
    for (std::size_t i = 0; i < form.entries.size(); ++i)
      for (std::size_t j = i + 1; j < form.entries.size(); ++j)
        h *= hilbert_symbol(form.entries[i], form.entries[j], v);
    if (h < 0) out.hasse_nonsplit.push_back(v);
  }
  return out;
}

// -- finite-field Witt tables --

namespace {

// Square classes of F_q including zero.
enum Cls { kZero = 0, kSquare = 1, kNonsquare = 2 };

/// Representation numbers r(c) = #{x : Q(x) = c}, one per class of c; they
/// only depend on the square class of c.
using Counts = std::array<Integer, 3>;

class RepresentationCalculus {
 public:
  explicit RepresentationCalculus(const FiniteFieldPtr& f) : f_(f) {
    const std::uint64_t q = f->order();
    const std::array<std::uint64_t, 3> reps{0, 1, f->generator()};
    for (int c = 0; c < 3; ++c)
      for (std::uint64_t u = 0; u < q; ++u) ++mix_[c][cls(u)][cls(f->sub(reps[c], u))];
  }

  Cls cls(std::uint64_t x) const {
    if (x == 0) return kZero;
    return is_square(FiniteFieldElement(f_, x)) ? kSquare : kNonsquare;
  }

  Counts line(std::uint64_t a) const {
    Counts r{Integer(1), Integer(0), Integer(0)};
    r[cls(a)] = 2;
    return r;
  }

  Counts sum(const Counts& x, const Counts& y) const {
    Counts r{Integer(0), Integer(0), Integer(0)};
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) r[c] += Integer(mix_[c][a][b]) * x[a] * y[b];
    return r;
  }

  Counts of(const std::vector<std::uint64_t>& entries) const {
    Counts r{Integer(1), Integer(0), Integer(0)};  // the zero form represents only 0
    for (auto a : entries) r = sum(r, line(a));
    return r;
  }

 private:
  FiniteFieldPtr f_;
  std::uint64_t mix_[3][3][3] = {};  // #{u in A : c - u in B} for c in class C
};

}  // namespace

std::string WittClass::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < anisotropic.entries.size(); ++i) {
    if (i) s += ", ";
    const auto& e = anisotropic.entries[i];
    s += e.field()->format(e.value());
  }
  return s + ">";
}

WittTable witt_table_finite_field(std::uint64_t q) {
  if (q % 2 == 0) throw std::invalid_argument("Witt table needs odd q");
  const auto f = FiniteField::of_order(q);
  const RepresentationCalculus calc(f);
  const std::vector<std::uint64_t> class_reps{1, f->generator()};
  const std::uint64_t minus_one = f->neg(1);

  // Isometry classes of dimension <= 2, keyed by dimension and representation counts.
  std::map<std::pair<std::size_t, Counts>, std::vector<std::uint64_t>> iso;
  std::vector<std::vector<std::uint64_t>> forms{{}};
  for (auto a : class_reps) forms.push_back({a});
  for (auto a : class_reps)
    for (auto b : class_reps)
      if (a <= b) forms.push_back({a, b});
  for (const auto& form : forms) iso.try_emplace({form.size(), calc.of(form)}, form);

  auto hyperbolic = [&](const std::vector<std::uint64_t>& entries) {
    if (entries.size() % 2) return false;
    std::vector<std::uint64_t> h;
    for (std::size_t i = 0; i < entries.size() / 2; ++i) {
      h.push_back(1);
      h.push_back(minus_one);
    }
    return calc.of(entries) == calc.of(h);
  };

  WittTable table{q, 0, 1, {}, true};
  for (auto a : class_reps)
    for (auto b : class_reps)
      for (auto c : class_reps)
        if (calc.of({a, b, c})[kZero] == 1) table.ternary_isotropic = false;

  for (const auto& [key, entries] : iso) {
    if (calc.of(entries)[kZero] != 1) continue;  // isotropic
    unsigned order = 1;
    std::vector<std::uint64_t> multiple = entries;
    while (!hyperbolic(multiple)) {
      if (++order > 8) throw std::logic_error("Witt class order exceeds 8");
      multiple.insert(multiple.end(), entries.begin(), entries.end());
    }
    DiagonalForm<FiniteFieldElement> form;
    for (auto x : entries) form.entries.emplace_back(f, x);
    table.classes.push_back({std::move(form), order});
    table.exponent = std::lcm(table.exponent, order);
  }
  std::sort(table.classes.begin(), table.classes.end(), [](const WittClass& x, const WittClass& y) {
    if (x.anisotropic.dimension() != y.anisotropic.dimension())
      return x.anisotropic.dimension() < y.anisotropic.dimension();
    for (std::size_t i = 0; i < x.anisotropic.dimension(); ++i)
      if (x.anisotropic.entries[i].value() != y.anisotropic.entries[i].value())
        return x.anisotropic.entries[i].value() < y.anisotropic.entries[i].value();
    return false;
  });
  table.size = table.classes.size();
  return table;
}

}  // namespace quadtower
