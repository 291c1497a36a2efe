#include <algorithm>
#include <map>
#include <stdexcept>

#include "quadtower/funcfield.hpp"

namespace quadtower {

FactoredRatFunc::FactoredRatFunc(MultiquadElement constant, std::vector<IrreducibleFactor> factors)
    : constant_(std::move(constant)), factors_(std::move(factors)) {
  if (constant_.is_zero()) throw std::invalid_argument("zero constant in factored rational function");
  for (const auto& f : factors_) {
    if (!(*f.poly.field() == *constant_.field()))
      throw std::invalid_argument("factor over a different constant field");
    if (f.poly.degree() < 1) throw std::invalid_argument("constant factor");
    if (!(f.poly.leading() == MultiquadElement::from_rational(constant_.field(), 1)))
      throw std::invalid_argument("factor not monic");
  }
  normalize();
}

FactoredRatFunc FactoredRatFunc::unit(MultiquadFieldPtr k) {
  return FactoredRatFunc(MultiquadElement::from_rational(std::move(k), 1), {});
}

void FactoredRatFunc::normalize() {
  std::map<std::string, IrreducibleFactor> merged;
  for (auto& f : factors_) {
    const std::string key = f.poly.to_string();
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(key, std::move(f));
    else
      it->second.exponent += f.exponent;
  }
  factors_.clear();
  for (auto& [key, f] : merged)
    if (f.exponent != 0) factors_.push_back(std::move(f));
}

int FactoredRatFunc::exponent_of(const KPoly& p) const {
  for (const auto& f : factors_)
    if (f.poly == p) return f.exponent;
  return 0;
}

FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  std::vector<IrreducibleFactor> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return FactoredRatFunc(a.constant_ * b.constant_, std::move(all));
}

FactoredRatFunc FactoredRatFunc::pow(int n) const {
  MultiquadElement c = MultiquadElement::from_rational(constant_.field(), 1);
  const MultiquadElement base = n < 0 ? constant_.inverse() : constant_;
  for (int i = 0; i < std::abs(n); ++i) c *= base;
  std::vector<IrreducibleFactor> fs;
  for (const auto& f : factors_) fs.push_back({f.poly, f.exponent * n});
  return FactoredRatFunc(c, std::move(fs));
}

FactoredRatFunc FactoredRatFunc::conjugate(unsigned mask) const {
  std::vector<IrreducibleFactor> fs;
  for (const auto& f : factors_) fs.push_back({f.poly.conjugate(mask), f.exponent});
  return FactoredRatFunc(constant_.conjugate(mask), std::move(fs));
}

KPoly FactoredRatFunc::expand() const {
  KPoly r = KPoly::constant(constant_);
  for (const auto& f : factors_) {
    if (f.exponent < 0) throw std::domain_error("expand: negative exponent");
    r = r * f.poly.pow(static_cast<unsigned>(f.exponent));
  }
  return r;
}

std::string FactoredRatFunc::to_string() const {
  std::string s;
  const bool unit_constant = constant_ == MultiquadElement::from_rational(constant_.field(), 1);
  if (!unit_constant || factors_.empty()) {
    s = KPoly::constant(constant_).to_string();
    if (s.front() != '(') s = "(" + s + ")";
  }
  for (const auto& f : factors_) {
    if (!s.empty()) s += "*";
    s += "(" + f.poly.to_string() + ")";
    if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

std::string irreducible_label(const KPoly& monic_irreducible) {
  return "irr:" + monic_irreducible.to_string();
}

namespace {

/// Canonical squarefree integer for a rational modulo k*^2: the smallest
/// |value| (positive first) over multiplication by products of generators.
Integer rational_class_rep(const MultiquadField& k, const Rational& c) {
  Integer best = squarefree_part(c);
  for (unsigned mask = 1; mask < k.degree(); ++mask) {
    Integer prod = 1;
    for (std::size_t i = 0; i < k.rank(); ++i)
      if (mask >> i & 1) prod *= k.generator(i);
    const Integer cand = squarefree_part(Integer(best * prod));
    const Integer ac = abs(cand), ab = abs(best);
    if (ac < ab || (ac == ab && cand > best)) best = cand;
  }
  return best;
}

}  // namespace

std::optional<std::string> constant_class_label(const MultiquadElement& c) {
  if (c.is_zero()) throw std::invalid_argument("class of zero");
  if (is_square(c)) return std::nullopt;
  const auto& k = *c.field();
  if (c.is_rational()) return "const:" + rational_class_rep(k, c.coord(0)).get_str();
  if (k.rank() == 1) {
    // c (c + 2n + conj c) = (c + n)^2 when c * conj c = n^2
    const Rational norm = absolute_norm(c);
    if (auto n = exact_sqrt(norm)) {
      const Rational trace = 2 * c.coord(0);
      for (const Rational& nn : {*n, Rational(-*n)}) {
        const Rational r = trace + 2 * nn;
        if (r != 0) return "const:" + rational_class_rep(k, r).get_str();
      }
    }
  }
  return "const:alg:" + c.to_string();
}

SquareClassVector square_class_of(const FactoredRatFunc& f) {
  SquareClassVector v;
  for (const auto& fac : f.factors())
    if (fac.exponent % 2 != 0) v.toggle(irreducible_label(fac.poly));
  if (auto label = constant_class_label(f.constant())) v.toggle(*label);
  return v;
}

MultiquadFieldPtr gaussian_rationals() {
  static const MultiquadFieldPtr k = MultiquadField::make({Integer(-1)});
  return k;
}

namespace {

SpanGenerator make_generator(const KPoly& p) {
  SpanGenerator g{p.to_string(), factor(p), {}};
  g.square_class = square_class_of(g.factored);
  return g;
}

}  // namespace

DisjointnessResult check_sampled_disjointness(const std::vector<Rational>& linear_r,
                                              const std::vector<QuadraticParams>& quadratic_bc) {
  for (const auto& [b, c] : quadratic_bc)
    if (b * b - 4 * c >= 0)
      throw std::invalid_argument("quadratic sample t^2+(" + to_string(b) + ")t+(" + to_string(c) +
                                  ") has nonnegative discriminant");
  const auto k = gaussian_rationals();
  const KPoly t = KPoly::variable(k);
  const KPoly i = KPoly::constant(MultiquadElement::root(k, 0));

  DisjointnessResult out;
  out.w_generators.push_back(make_generator(t - i));
  out.w_generators.push_back(make_generator(t + i * KPoly::constant(k, 2)));
  for (const auto& r : linear_r) out.v_generators.push_back(make_generator(t + KPoly::constant(k, r)));
  for (const auto& [b, c] : quadratic_bc)
    out.v_generators.push_back(
        make_generator(t * t + t * KPoly::constant(k, b) + KPoly::constant(k, c)));

  for (const auto& g : out.w_generators)
    out.w_space = insert_and_test_independent(out.w_space, g.square_class).first;
  for (const auto& g : out.v_generators)
    out.v_space = insert_and_test_independent(out.v_space, g.square_class).first;
  out.witness = intersection_witness(out.w_space, out.v_space);
  out.trivial = !out.witness.has_value();
  return out;
}

ParityTrace parity_trace(const DisjointnessResult& spans, const FactoredRatFunc& query) {
  ParityTrace trace;
  trace.query = square_class_of(query);
  trace.residual = spans.v_space.reduce(trace.query);
  trace.member = trace.residual.is_identity();
  for (const auto& gen : spans.v_generators) {
    for (const auto& label : trace.query.support()) {
      if (!gen.square_class.contains(label)) continue;
      ParityTrace::Entry e{gen.name, label, {}, {}};
      for (const auto& partner : gen.square_class.support()) {
        if (partner == label) continue;
        e.partner_labels.push_back(partner);
        int exp = trace.query.contains(partner) ? 1 : 0;
        for (const auto& fac : gen.factored.factors())
          if (irreducible_label(fac.poly) == partner) exp = query.exponent_of(fac.poly);
        e.partner_exponents_in_query.push_back(exp);
      }
      trace.entries.push_back(std::move(e));
    }
  }
  return trace;
}

}  // namespace quadtower
