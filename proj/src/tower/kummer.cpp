#include "quadtower/kummer.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadtower {

namespace {

MultiquadElement zero_of(const MultiquadFieldPtr& k) { return MultiquadElement::from_rational(k, 0); }

MultiquadElement subset_product(const std::vector<MultiquadElement>& xs, unsigned mask,
                                const MultiquadFieldPtr& k) {
  MultiquadElement p = MultiquadElement::from_rational(k, 1);
  for (std::size_t j = 0; j < xs.size(); ++j)
    if (mask >> j & 1) p *= xs[j];
  return p;
}

}  // namespace

KummerExtension::KummerExtension(MultiquadFieldPtr base, std::vector<MultiquadElement> radicands)
    : base_(std::move(base)), radicands_(std::move(radicands)) {
  if (radicands_.size() > 3) throw std::invalid_argument("at most 3 radicands");
  for (const auto& k : radicands_) {
    if (!(*k.field() == *base_)) throw std::invalid_argument("radicand outside the base field");
    if (k.is_zero()) throw std::invalid_argument("zero radicand");
  }
  for (unsigned s = 1; s < (1u << radicands_.size()); ++s)
    if (is_square(subset_product(radicands_, s, base_)))
      throw std::invalid_argument("radicands are dependent modulo squares");
}

KummerExtension::Element KummerExtension::embed(const MultiquadElement& x) const {
  Element e{std::vector<MultiquadElement>(std::size_t{1} << radicands_.size(), zero_of(base_))};
  e.coords[0] = x;
  return e;
}

KummerExtension::Element KummerExtension::root(std::size_t j) const {
  Element e = embed(zero_of(base_));
  e.coords.at(std::size_t{1} << j) = MultiquadElement::from_rational(base_, 1);
  return e;
}

KummerExtension::Element KummerExtension::mul(const Element& a, const Element& b) const {
  Element r = embed(zero_of(base_));
  const unsigned n = static_cast<unsigned>(a.coords.size());
  for (unsigned s = 0; s < n; ++s) {
    if (a.coords[s].is_zero()) continue;
    for (unsigned t = 0; t < n; ++t) {
      if (b.coords[t].is_zero()) continue;
      r.coords[s ^ t] += a.coords[s] * b.coords[t] * subset_product(radicands_, s & t, base_);
    }
  }
  return r;
}

KummerExtension::Element KummerExtension::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t s = 0; s < r.coords.size(); ++s) r.coords[s] += b.coords[s];
  return r;
}

KummerExtension::Element KummerExtension::scale(const Element& a, const Rational& q) const {
  Element r = a;
  for (auto& c : r.coords) c *= q;
  return r;
}

std::string KummerExtension::format(const Element& a) const {
  std::string s;
  for (unsigned m = 0; m < a.coords.size(); ++m) {
    if (a.coords[m].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += a.coords[m].to_string();
    for (std::size_t j = 0; j < radicands_.size(); ++j)
      if (m >> j & 1) s += "*sqrt(k" + std::to_string(j + 1) + ")";
  }
  return s.empty() ? "0" : s;
}

std::optional<std::vector<KummerExtension::Automorphism>> KummerExtension::automorphisms() const {
  const std::size_t r = radicands_.size();
  std::vector<Automorphism> out;
  for (unsigned tau = 0; tau < base_->degree(); ++tau) {
    // tau(k_j) = y_j^2 * prod_{i in S_j} k_i
    std::vector<Element> base_images;
    for (std::size_t j = 0; j < r; ++j) {
      const MultiquadElement image = radicands_[j].conjugate(tau);
      std::optional<Element> found;
      for (unsigned s = 0; s < (1u << r) && !found; ++s) {
        if (auto y = sqrt_exact(image / subset_product(radicands_, s, base_))) {
          Element e = embed(zero_of(base_));
          e.coords[s] = *y;
          found = e;
        }
      }
      if (!found) return std::nullopt;
      base_images.push_back(*found);
    }
    for (unsigned signs = 0; signs < (1u << r); ++signs) {
      Automorphism a{tau, base_images};
      for (std::size_t j = 0; j < r; ++j)
        if (signs >> j & 1) a.root_images[j] = scale(a.root_images[j], -1);
      out.push_back(std::move(a));
    }
  }
  return out;
}

KummerExtension::Element KummerExtension::apply(const Automorphism& s, const Element& x) const {
  Element r = embed(zero_of(base_));
  for (unsigned m = 0; m < x.coords.size(); ++m) {
    if (x.coords[m].is_zero()) continue;
    Element term = embed(x.coords[m].conjugate(s.base_mask));
    for (std::size_t j = 0; j < radicands_.size(); ++j)
      if (m >> j & 1) term = mul(term, s.root_images[j]);
    r = add(r, term);
  }
  return r;
}

std::optional<KummerExtension::GaloisAction> KummerExtension::galois_action() const {
  auto autos = automorphisms();
  if (!autos) return std::nullopt;
  GaloisAction act{{}, std::move(*autos), {}, FiniteTwoGroup::from_permutations({})};
  std::vector<Element> seeds;
  for (std::size_t i = 0; i < base_->rank(); ++i) seeds.push_back(embed(MultiquadElement::root(base_, i)));
  for (std::size_t j = 0; j < radicands_.size(); ++j) seeds.push_back(root(j));
  for (const auto& s : act.automorphisms)
    for (const auto& x : seeds) {
      Element y = apply(s, x);
      if (std::find(act.domain.begin(), act.domain.end(), y) == act.domain.end())
        act.domain.push_back(std::move(y));
    }
  if (act.domain.size() > kMaxPermutationDegree) throw std::length_error("conjugate set exceeds 64 points");
  for (const auto& s : act.automorphisms) {
    Permutation p(act.domain.size());
    for (std::size_t x = 0; x < act.domain.size(); ++x) {
      const Element y = apply(s, act.domain[x]);
      const auto it = std::find(act.domain.begin(), act.domain.end(), y);
      if (it == act.domain.end()) throw std::logic_error("automorphism leaves the conjugate set");
      p[x] = static_cast<std::uint8_t>(it - act.domain.begin());
    }
    act.permutations.push_back(std::move(p));
  }
  act.group = FiniteTwoGroup::from_permutations(act.permutations);
  return act;
}

// -- real cyclotomic fields --

std::vector<Integer> chebyshev_c(unsigned n) {
  std::vector<Integer> prev{2}, cur{0, 1};
  if (n == 0) return prev;
  for (unsigned i = 1; i < n; ++i) {
    std::vector<Integer> next(cur.size() + 1, 0);
    for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] += cur[d];
    for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PowerBasisField::PowerBasisField(std::vector<Rational> modulus) : modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
}

PowerBasisField::Element PowerBasisField::reduce(std::vector<Rational> a) const {
  const std::size_t n = degree();
  for (std::size_t k = a.size(); k-- > n;) {
    const Rational c = a[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) a[k - n + i] -= c * modulus_[i];
  }
  a.resize(n, Rational(0));
  return a;
}

PowerBasisField::Element PowerBasisField::generator() const {
  Element e(degree(), Rational(0));
  if (degree() == 1)
    e[0] = -modulus_[0];
  else
    e[1] = 1;
  return e;
}

PowerBasisField::Element PowerBasisField::constant(const Rational& r) const {
  Element e(degree(), Rational(0));
  e[0] = r;
  return e;
}

PowerBasisField::Element PowerBasisField::mul(const Element& a, const Element& b) const {
  std::vector<Rational> prod(2 * degree(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  return reduce(std::move(prod));
}

PowerBasisField::Element PowerBasisField::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

PowerBasisField::Element PowerBasisField::evaluate(const std::vector<Integer>& f, const Element& a) const {
  Element acc = constant(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, a), constant(Rational(*it)));
  return acc;
}

RealCyclotomicWitness real_cyclotomic_witness(unsigned k) {
  if (k < 3 || k > 8) throw std::invalid_argument("real cyclotomic witness needs 3 <= k <= 8");
  const unsigned half = 1u << (k - 1);  // zeta^half = -1
  std::vector<Rational> minpoly;
  if (k == 5) {
    for (int c : kZeta32PlusMinPoly) minpoly.emplace_back(c);
  } else {
    for (const auto& c : chebyshev_c(1u << (k - 2))) minpoly.emplace_back(c);
  }
  const PowerBasisField field(minpoly);
  const auto x = field.generator();

  RealCyclotomicWitness w{k, minpoly, field.degree(), true, {}, false, false, 0};
  std::vector<PowerBasisField::Element> roots;
  std::vector<unsigned> odd;
  for (unsigned m = 1; m < half; m += 2) odd.push_back(m);
  std::vector<Integer> p_int;
  for (const auto& c : minpoly) p_int.push_back(c.get_num());
  for (unsigned m : odd) {
    roots.push_back(field.evaluate(chebyshev_c(m), x));
    if (field.evaluate(p_int, roots.back()) != field.constant(0)) w.roots_verified = false;
  }

  std::vector<Permutation> perms;
  for (unsigned j : odd) {
    const auto image_of_x = field.evaluate(chebyshev_c(j), x);
    Permutation p(roots.size());
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const auto image = field.evaluate(chebyshev_c(odd[r]), image_of_x);
      const auto it = std::find(roots.begin(), roots.end(), image);
      if (it == roots.end()) throw std::logic_error("automorphism image is not a root");
      p[r] = static_cast<std::uint8_t>(it - roots.begin());
    }
    perms.push_back(std::move(p));
  }
  const auto group = FiniteTwoGroup::from_permutations(perms);
  w.group = fingerprint(group);
  w.cyclic = w.group.exponent == w.group.order;

  // sqrt 2 = zeta_8 + zeta_8^-1 = C_(2^(k-3))(x)
  const auto s = field.evaluate(chebyshev_c(1u << (k - 3)), x);
  w.contains_sqrt2 = field.mul(s, s) == field.constant(2);
  for (unsigned j : odd)
    if (field.evaluate(chebyshev_c(1u << (k - 3)), field.evaluate(chebyshev_c(j), x)) == s)
      ++w.sqrt2_stabilizer;
  return w;
}

}  // namespace quadtower
