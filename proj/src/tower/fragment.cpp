#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "quadtower/symbols.hpp"
#include "quadtower/tower.hpp"

namespace quadtower {

TowerFragment TowerFragment::rational(const std::vector<Integer>& generators) {
  TowerFragment f;
  f.kind_ = BaseKind::rationals;
  std::vector<Integer> gens;
  for (const auto& g : generators) {
    if (g == 0) throw std::invalid_argument("zero generator");
    gens.push_back(squarefree_part(g));
  }
  f.level2_ = MultiquadField::make(gens);
  f.descriptor_ = "Q{";
  for (std::size_t i = 0; i < gens.size(); ++i) f.descriptor_ += (i ? "," : "") + gens[i].get_str();
  f.descriptor_ += "}";
  return f;
}

TowerFragment TowerFragment::finite(std::uint64_t q) {
  TowerFragment f;
  f.kind_ = BaseKind::finite_field;
  f.base_ff_ = FiniteField::of_order(q);
  f.level2_ff_ = FiniteField::make(f.base_ff_->characteristic(), 2 * f.base_ff_->degree());
  f.descriptor_ = "F" + std::to_string(q);
  return f;
}

TowerFragment TowerFragment::function_field() {
  TowerFragment f;
  f.kind_ = BaseKind::function_field;
  f.descriptor_ = "Q(i)(t)";
  return f;
}

const MultiquadFieldPtr& TowerFragment::level2() const {
  if (kind_ != BaseKind::rationals) throw std::logic_error(descriptor_ + " has no multiquadratic level 2");
  return level2_;
}

const FiniteFieldPtr& TowerFragment::base_finite() const {
  if (kind_ != BaseKind::finite_field) throw std::logic_error(descriptor_ + " is not a finite fragment");
  return base_ff_;
}

const FiniteFieldPtr& TowerFragment::level2_finite() const {
  if (kind_ != BaseKind::finite_field) throw std::logic_error(descriptor_ + " is not a finite fragment");
  return level2_ff_;
}

std::size_t TowerFragment::action_order() const {
  switch (kind_) {
    case BaseKind::rationals: return level2_->degree();
    case BaseKind::finite_field: return 2;
    case BaseKind::function_field: break;
  }
  throw std::logic_error("no finite action recorded for " + descriptor_);
}

TowerFragment parse_fragment(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q(i)(t)") return TowerFragment::function_field();
  if (s == "Q") return TowerFragment::rational({});
  if (s.size() >= 3 && s[0] == 'Q' && s[1] == '{' && s.back() == '}') {
    std::vector<Integer> gens;
    const std::string body = s.substr(2, s.size() - 3);
    std::size_t start = 0;
    while (start < body.size()) {
      std::size_t end = body.find(',', start);
      if (end == std::string::npos) end = body.size();
      Integer g;
      if (g.set_str(body.substr(start, end - start), 10) != 0)
        throw std::invalid_argument("bad generator in fragment '" + s + "'");
      gens.push_back(g);
      start = end + 1;
    }
    return TowerFragment::rational(gens);
  }
  if (s.size() >= 2 && s[0] == 'F' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return TowerFragment::finite(std::stoull(s.substr(1)));
  throw std::invalid_argument("unknown fragment '" + std::string(text) + "'");
}

std::vector<unsigned> QuadraticSubfield::fixing_masks(const TowerFragment& f) const {
  if (f.kind() != BaseKind::rationals) return {0};
  std::vector<unsigned> out;
  for (unsigned m = 0; m < f.level2()->degree(); ++m)
    if (std::popcount(m & mask) % 2 == 0) out.push_back(m);
  return out;
}

std::string QuadraticSubfield::to_string(const TowerFragment& f) const {
  if (f.kind() == BaseKind::finite_field) return f.level2_finite()->to_string();
  Integer prod = 1;
  for (std::size_t i = 0; i < f.level2()->rank(); ++i)
    if (mask >> i & 1) prod *= f.level2()->generator(i);
  return MultiquadField::make({squarefree_part(prod)})->to_string();
}

QuadraticSubfield subfield_of(const TowerFragment& f, const Integer& a) {
  if (f.kind() == BaseKind::finite_field) return {0};
  const Integer target = squarefree_part(a);
  const auto& k = *f.level2();
  for (unsigned m = 1; m < k.degree(); ++m) {
    Integer prod = 1;
    for (std::size_t i = 0; i < k.rank(); ++i)
      if (m >> i & 1) prod *= k.generator(i);
    if (squarefree_part(prod) == target) return {m};
  }
  throw std::invalid_argument("Q(sqrt " + a.get_str() + ") is not a subfield of " + f.descriptor());
}

namespace {

void check_radicand(const TowerFragment& f, const MultiquadElement& a) {
  if (!(*a.field() == *f.level2())) throw std::invalid_argument("element outside the level-2 field");
  if (a.is_zero()) throw std::invalid_argument("zero radicand");
  if (is_square(a)) throw std::invalid_argument("radicand is a square, the extension is trivial");
}

bool ratios_square(const MultiquadElement& a, const std::vector<unsigned>& masks) {
  return std::all_of(masks.begin(), masks.end(), [&](unsigned m) { return is_square(a.conjugate(m) / a); });
}

std::vector<unsigned> all_masks(const TowerFragment& f) {
  std::vector<unsigned> out(f.level2()->degree());
  for (unsigned m = 0; m < out.size(); ++m) out[m] = m;
  return out;
}

}  // namespace

bool is_quadratic_ext_galois(const TowerFragment& f, const MultiquadElement& a) {
  check_radicand(f, a);
  return ratios_square(a, all_masks(f));
}

bool is_quadratic_ext_galois(const TowerFragment& f, const FiniteFieldElement& a) {
  if (!(*a.field() == *f.level2_finite())) throw std::invalid_argument("element outside the level-2 field");
  if (a.is_zero()) throw std::invalid_argument("zero radicand");
  if (is_square(a)) throw std::invalid_argument("radicand is a square, the extension is trivial");
  const std::uint64_t q = f.base_finite()->order();
  return is_square(a.pow(q) / a);
}

bool is_quadratic_ext_galois_over(const TowerFragment& f, const QuadraticSubfield& l,
                                  const MultiquadElement& a) {
  check_radicand(f, a);
  return ratios_square(a, l.fixing_masks(f));
}

GaloisWitness galois_closure_quadratic(const TowerFragment& f, const QuadraticSubfield& l,
                                       const MultiquadElement& k) {
  if (!is_quadratic_ext_galois_over(f, l, k))
    throw std::invalid_argument("K(sqrt k)/L is not Galois for k = " + k.to_string());
  const auto& K = f.level2();
  GaloisWitness w{"sqrt(" + k.to_string() + ")", {k.to_string()}, 2 * K->degree(), 0, false, false, {}};
  std::vector<MultiquadElement> radicands{k};
  w.input_galois = is_quadratic_ext_galois(f, k);
  if (!w.input_galois) {
    for (unsigned m = 0; m < K->degree(); ++m)
      if (!is_square(k.conjugate(m) / k)) {
        radicands.push_back(k.conjugate(m));
        w.radicands.push_back(radicands.back().to_string());
        break;
      }
  }
  const KummerExtension e(K, radicands);
  w.degree = e.degree();
  if (auto act = e.galois_action()) {
    w.group = fingerprint(act->group);
    w.closure_stable = act->group.order() == e.degree();
  }
  return w;
}

J1Result j1_fixed_classes(const TowerFragment& f, const std::vector<MultiquadElement>& pool) {
  const auto& K = f.level2();
  J1Result out;
  std::vector<MultiquadElement> products{MultiquadElement::from_rational(K, 1)};
  std::vector<unsigned> pool_class;  // subset of pool_basis per pool member
  for (const auto& c : pool) {
    if (!(*c.field() == *K)) throw std::invalid_argument("candidate outside the level-2 field");
    if (c.is_zero()) throw std::invalid_argument("zero candidate");
    out.pool.push_back(c.to_string());
    std::optional<unsigned> rep;
    for (unsigned s = 0; s < products.size() && !rep; ++s)
      if (is_square(c * products[s])) rep = s;
    if (!rep) {
      if (out.pool_basis.size() >= 12) throw std::length_error("candidate pool basis exceeds 12 classes");
      const std::size_t n = products.size();
      for (std::size_t s = 0; s < n; ++s) products.push_back(products[s] * c);
      rep = 1u << out.pool_basis.size();
      out.pool_basis.push_back(c);
    }
    pool_class.push_back(*rep);
  }
  auto vector_of = [&](unsigned s) {
    SquareClassVector v;
    for (std::size_t i = 0; i < out.pool_basis.size(); ++i)
      if (s >> i & 1) v.toggle("alg:" + out.pool_basis[i].to_string());
    return v;
  };
  const auto masks = all_masks(f);
  for (unsigned s = 1; s < products.size(); ++s) {
    if (!ratios_square(products[s], masks)) continue;
    auto [space, flag] = insert_and_test_independent(out.fixed, vector_of(s));
    if (flag == Independence::independent) out.fixed_representatives.push_back(products[s].to_string());
    out.fixed = std::move(space);
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!membership(out.fixed, vector_of(pool_class[i]))) out.rejected.push_back(out.pool[i]);
  return out;
}

std::vector<MultiquadElement> default_candidate_pool(const TowerFragment& f,
                                                     const std::vector<MultiquadElement>& samples) {
  const auto& K = f.level2();
  std::vector<MultiquadElement> pool;
  auto add = [&](const MultiquadElement& x) {
    if (!x.is_zero() && std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(x);
  };
  for (int c : {-1, 2, 3, 5}) add(MultiquadElement::from_rational(K, c));
  for (std::size_t i = 0; i < K->rank(); ++i) add(MultiquadElement::from_rational(K, Rational(K->generator(i))));
  for (std::size_t i = 0; i < K->rank(); ++i) add(MultiquadElement::root(K, i));
  for (const auto& s : samples) {
    add(s);
    add(MultiquadElement::from_rational(K, absolute_norm(s)));
    for (std::size_t i = 0; i < K->rank(); ++i)
      if (s.involves(i)) add(norm_to_subfield(s, i));
  }
  return pool;
}

FiniteLevel finite_level(std::uint64_t q, unsigned n) {
  if (n == 0) throw std::invalid_argument("levels start at 1");
  const auto base = FiniteField::of_order(q);
  const unsigned rel = 1u << (n - 1);  // [F(n) : F]
  const auto field = FiniteField::make(base->characteristic(), base->degree() * rel);
  const FiniteFieldElement x(field, field->generator());
  FiniteLevel level{n, field->order(), is_square(x) ? 0u : 1u, {}, {}};
  // Gal(F(n)/F) is generated by y -> y^q; the class of x is fixed iff every ratio is a square.
  bool fixed = level.class_group_dimension == 1;
  std::vector<FiniteFieldElement> conj{x};
  for (unsigned j = 1; j < rel; ++j) {
    conj.push_back(conj.back().pow(q));
    if (!is_square(conj.back() / x)) fixed = false;
  }
  if (fixed) {
    SquareClassVector v;
    v.toggle("gen:" + x.to_string());
    level.fixed = insert_and_test_independent(level.fixed, v).first;
  }
  Permutation frob(conj.size());
  for (std::size_t j = 0; j < conj.size(); ++j) {
    const auto image = conj[j].pow(q);
    const auto it = std::find(conj.begin(), conj.end(), image);
    if (it == conj.end()) throw std::logic_error("Frobenius image outside the conjugates");
    frob[j] = static_cast<std::uint8_t>(it - conj.begin());
  }
  level.group = fingerprint(FiniteTwoGroup::from_permutations({frob}));
  return level;
}

std::vector<FiniteLevel> finite_tower_levels(std::uint64_t q, unsigned max_level) {
  std::vector<FiniteLevel> out;
  for (unsigned n = 1; n <= max_level; ++n) out.push_back(finite_level(q, n));
  return out;
}

SquareClassSpace j1_fixed_classes(const TowerFragment& f) {
  switch (f.kind()) {
    case BaseKind::finite_field: return finite_level(f.base_finite()->order(), 2).fixed;
    case BaseKind::rationals: return j1_fixed_classes(f, default_candidate_pool(f, {})).fixed;
    case BaseKind::function_field: break;
  }
  throw std::invalid_argument("no candidate pool for " + f.descriptor());
}

namespace {

/// Integer points on gamma^2 = a alpha^2 + b beta^2 with alpha > 0, by height.
template <class Visit>
bool for_each_conic_point(const Integer& a, const Integer& b, unsigned bound, Visit visit) {
  for (unsigned h = 1; h <= bound; ++h)
    for (unsigned al = 1; al <= h; ++al)
      for (unsigned be = 0; be <= h; ++be) {
        const Integer v = a * al * al + b * be * be;
        if (v < 0) continue;
        const auto g = exact_sqrt(v);
        if (!g || *g > h) continue;
        if (std::max<Integer>({Integer(al), Integer(be), *g}) != h) continue;
        if (visit(ConicPoint{al, be, *g})) return true;
      }
  return false;
}

}  // namespace

std::optional<ConicPoint> find_conic_point(const Integer& a, const Integer& b, unsigned bound) {
  std::optional<ConicPoint> found;
  for_each_conic_point(a, b, bound, [&](const ConicPoint& p) {
    found = p;
    return true;
  });
  return found;
}

std::optional<D4Witness> construct_d4_witness(const Rational& a, const Rational& b) {
  if (!embeds_in_d4(a, b))
    throw std::invalid_argument("Q(sqrt a, sqrt b) has no D4 embedding with the required cyclic subgroup");
  const Integer A = squarefree_part(a), B = squarefree_part(b);
  const auto fragment = TowerFragment::rational({A});
  const auto& K = fragment.level2();
  std::optional<D4Witness> result;
  for_each_conic_point(A, B, 100, [&](const ConicPoint& p) {
    const MultiquadElement delta = MultiquadElement::from_rational(K, Rational(p.gamma)) +
                                   MultiquadElement::root(K, 0) * Rational(p.alpha);
    if (is_square(delta)) return false;
    const MultiquadElement conj = delta.conjugate(1);
    const KummerExtension e(K, {delta, conj});
    const auto act = e.galois_action();
    D4Witness w{A, B, p, delta.to_string(), {}, false, false};
    w.closure = GaloisWitness{"sqrt(" + delta.to_string() + ")", {delta.to_string(), conj.to_string()},
                              2 * K->degree(), e.degree(), is_quadratic_ext_galois(fragment, delta),
                              act.has_value(), {}};
    if (act) {
      w.closure.group = fingerprint(act->group);
      w.closure.closure_stable = act->group.order() == e.degree();
      // s = sqrt(delta) sqrt(conj delta) / beta squares to B
      const auto s = e.scale(e.mul(e.root(0), e.root(1)), Rational(1) / Rational(p.beta));
      w.contains_sqrt_b = e.mul(s, s) == e.embed(MultiquadElement::from_rational(K, Rational(B)));
      const auto sqrt_ab = e.mul(e.embed(MultiquadElement::root(K, 0)), s);
      std::vector<Permutation> stabilizer;
      for (std::size_t i = 0; i < act->automorphisms.size(); ++i)
        if (e.apply(act->automorphisms[i], sqrt_ab) == sqrt_ab) stabilizer.push_back(act->permutations[i]);
      if (stabilizer.size() == 4) {
        const auto h = FiniteTwoGroup::from_permutations(stabilizer);
        w.cyclic_over_ab = h.order() == 4 && exponent(h) == 4;
      }
    }
    result = std::move(w);
    return true;
  });
  return result;
}

bool eisenstein_binomial(const Integer& a, unsigned n, const Integer& p) {
  if (n == 0 || !is_prime(p)) throw std::invalid_argument("eisenstein_binomial: bad arguments");
  return a % p == 0 && a % (p * p) != 0;
}

namespace {
bool always_square(const Rational&) { return true; }
bool positive_square(const Rational& x) { return x > 0; }
bool rational_square(const Rational& x) { return is_square(x); }
}  // namespace

SymbolicField quadratically_closed_tag() { return {"quadratically-closed", &always_square}; }
SymbolicField euclidean_tag() { return {"euclidean", &positive_square}; }
SymbolicField rational_field_model() { return {"Q", &rational_square}; }

FieldCase classify_field(const SymbolicField& f) {
  std::vector<Rational> probes;
  for (int n = -12; n <= 12; ++n)
    if (n != 0) probes.emplace_back(n);
  probes.push_back(make_rational(1, 2));
  probes.push_back(make_rational(-3, 5));
  if (std::all_of(probes.begin(), probes.end(), [&](const Rational& x) { return f.is_square(x); }))
    return FieldCase::quadratically_closed;
  if (f.is_square(-1)) return FieldCase::neither;
  for (const auto& x : probes) {
    if (!f.is_square(x) && !f.is_square(Rational(-x))) return FieldCase::neither;
    for (const auto& y : probes)
      if (!f.is_square(Rational(x * x + y * y))) return FieldCase::neither;
  }
  return FieldCase::euclidean;
}

std::string to_string(FieldCase c) {
  switch (c) {
    case FieldCase::quadratically_closed: return "quadratically-closed";
    case FieldCase::euclidean: return "euclidean";
    case FieldCase::neither: return "neither";
  }
  return "?";
}

}  // namespace quadtower
