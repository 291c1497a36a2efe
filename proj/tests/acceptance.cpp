#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "quadtower/funcfield.hpp"
#include "quadtower/kummer.hpp"
#include "quadtower/report.hpp"
#include "quadtower/symbols.hpp"
#include "quadtower/tower.hpp"

using namespace quadtower;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

MultiquadElement uv(const TowerFragment& f, long u, long v, std::size_t i = 0) {
  return MultiquadElement::from_rational(f.level2(), Rational(u)) +
         MultiquadElement::root(f.level2(), i) * Rational(v);
}

// rank over F_2 of label sets, by plain elimination
std::size_t f2_rank(const std::vector<SquareClassVector>& vs) {
  std::vector<std::set<std::string>> rows;
  for (const auto& v : vs) {
    std::set<std::string> r(v.support().begin(), v.support().end());
    for (const auto& b : rows)
      if (r.count(*b.begin()))
        for (const auto& l : b)
          if (!r.erase(l)) r.insert(l);
    if (r.empty()) continue;
    for (auto& b : rows)
      if (b.count(*r.begin()))
        for (const auto& l : r)
          if (!b.erase(l)) b.insert(l);
    rows.push_back(std::move(r));
  }
  return rows.size();
}

std::vector<SquareClassVector> classes(const std::vector<SpanGenerator>& gens) {
  std::vector<SquareClassVector> out;
  for (const auto& g : gens) out.push_back(g.square_class);
  return out;
}

// [closure : Q] from the orbit of k: [K : Q] * 2^rank of the conjugate classes
std::size_t closure_degree_by_orbit(const MultiquadElement& k) {
  const auto orbit = galois_orbit(k);
  std::vector<MultiquadElement> basis;
  std::size_t rank = 0;
  for (const auto& c : orbit) {
    bool dependent = false;
    const std::size_t n = basis.size();
    for (std::size_t s = 0; s < (std::size_t{1} << n) && !dependent; ++s) {
      MultiquadElement p = c;
      for (std::size_t j = 0; j < n; ++j)
        if (s >> j & 1) p *= basis[j];
      dependent = is_square(p);
    }
    if (!dependent) {
      basis.push_back(c);
      ++rank;
    }
  }
  return k.field()->degree() << rank;
}

Outcome groups_catalog() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, FiniteTwoGroup>> groups;
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    const auto s = tower_series(g);
    o.require(s.chain.back().order() == 1, name + ": series does not reach 1");
    o.require(structural_checks(g).all_pass(), name + ": structural checks");
    groups.emplace_back(name, g);
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  for (const auto& [name, g] : groups) {
    const auto s = tower_series(g);
    o.require(oracle::to_members(s.level(2), g.order()) == oracle::frattini(g), name + ": G(2) is not Frattini");
    for (std::size_t i = 0; i + 1 < s.chain.size(); ++i)
      o.require(oracle::to_members(s.chain[i + 1], g.order()) ==
                    oracle::series_step_by_search(g, oracle::to_members(s.chain[i], g.order())),
                name + ": series step");
    for (const auto& l : s.levels) {
      const auto q = quotient_group(g, s.level(l.n));
      o.require(((1u << (l.n - 1)) % oracle::exponent_by_powers(q)) == 0, name + ": exponent bound");
      o.require(oracle::class_by_upper_series(q) + 1 <= l.n, name + ": class bound");
    }
  }
  const std::set<std::string> want{"C2",  "C2^2", "C2^3",   "Z2",    "Z4",     "Z8",   "Z16",
                                   "D4",  "Q8",   "SD16",   "M4(2)", "D4xZ2",  "Q8xZ2", "Z4xZ4"};
  const auto names = catalog_names();
  const std::set<std::string> have(names.begin(), names.end());
  for (const auto& w : want) o.require(have.count(w) || (w == "C2" && have.count("Z2")), "missing " + w);
  return o;
}

Outcome d4_values() {
  Outcome o;
  const auto g = catalog_group("D4");
  const auto s = tower_series(g);
  o.require(oracle::to_members(s.level(2), 8) == oracle::center_by_search(g), "G(2) is not the centre");
  o.require(s.level(2).order() == 2, "|G(2)| != 2");
  o.require(s.level(3).order() == 1, "G(3) != 1");
  const auto g2 = quotient_group(g, s.level(2));
  o.require(g2.order() == 4 && oracle::exponent_by_powers(g2) == 2, "G^[2] is not (Z/2)^2");
  const auto g3 = quotient_group(g, s.level(3));
  o.require(g3.order() == 8, "G^[3] != D4");
  o.require(oracle::exponent_by_powers(g3) == 4, "exponent(G^[3]) != 4");
  o.require(oracle::class_by_upper_series(g3) == 2, "class(G^[3]) != 2");
  return o;
}

Outcome lemma3_dichotomy() {
  Outcome o;
  std::size_t sampled = 0;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const char* d : {"Q{2}", "Q{2,-1}", "Q{5}"}) {
    const auto f = parse_fragment(d);
    auto samples = sample_elements(f);
    for (int i = 0; i < 20; ++i) {
      std::vector<Rational> coords;
      for (std::size_t j = 0; j < f.level2()->degree(); ++j) coords.emplace_back(c(rng));
      samples.emplace_back(f.level2(), coords);
    }
    for (const auto& k : samples) {
      if (k.is_zero() || is_square(k) || !is_quadratic_ext_galois_over(f, {1}, k)) continue;
      const auto w = galois_closure_quadratic(f, {1}, k);
      const bool galois = is_quadratic_ext_galois(f, k);
      const std::size_t expect = galois ? w.input_degree : 2 * w.input_degree;
      o.require(w.degree == expect, std::string(d) + ": degree of " + k.to_string());
      o.require(closure_degree_by_orbit(k) == w.degree, std::string(d) + ": orbit degree of " + k.to_string());
      o.require(w.group.order == w.degree, std::string(d) + ": group order");
      ++sampled;
    }
  }
  o.require(sampled >= 20, "only " + std::to_string(sampled) + " samples");
  const auto f = parse_fragment("Q{2}");
  const auto w = galois_closure_quadratic(f, {1}, uv(f, 1, 1));
  o.require(w.degree == 8, "1+sqrt2 closure degree");
  o.require(w.group == fingerprint(catalog_group("D4")), "1+sqrt2 fingerprint");
  o.detail = o.pass ? std::to_string(sampled) + " samples" : o.detail;
  return o;
}

Outcome statement_prop1() {
  Outcome o;
  const auto f = parse_fragment("Q{2}");
  o.require(is_quadratic_ext_galois(f, uv(f, 2, 1)), "2+sqrt2");
  o.require(!is_quadratic_ext_galois(f, uv(f, 1, 1)), "1+sqrt2");
  o.require(is_quadratic_ext_galois(f, uv(f, 3, 0)), "3");
  o.require(statement_suite().all_pass(), "statement suite");
  for (const char* d : {"Q{2}", "Q{5}", "Q{3}", "Q{-1}"}) {
    const auto frag = parse_fragment(d);
    const long a = std::stol(std::string(d).substr(2));
    for (const auto& k : sample_elements(frag)) {
      const auto& x = k.coords();
      if (x[0].get_den() != 1 || x[1].get_den() != 1) continue;
      o.require(is_quadratic_ext_galois(frag, k) ==
                    oracle::quartic_is_galois(x[0].get_num().get_si(), x[1].get_num().get_si(), a),
                std::string(d) + ": " + k.to_string());
    }
  }
  for (const char* d : {"Q{2}", "Q{2,-1}", "Q{5}"}) {
    const auto frag = parse_fragment(d);
    std::vector<MultiquadElement> galois;
    for (const auto& k : sample_elements(frag))
      if (is_quadratic_ext_galois_over(frag, {1}, k)) galois.push_back(k);
    o.require(!galois.empty(), std::string(d) + ": no samples");
    o.require(prop1_check(frag, {1}, galois).all_pass(), std::string(d) + ": prop1");
  }
  o.require(prop1_check(parse_fragment("F3")).all_pass(), "F3 prop1");
  o.require(prop1_suite({parse_fragment("Q{2,-1}"), parse_fragment("Q{2}"), parse_fragment("F3")}).all_pass(),
            "prop1 suite");
  return o;
}

Outcome hilbert_grid() {
  Outcome o;
  const std::vector<long> grid{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10};
  const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  const auto t0 = Clock::now();
  std::vector<Place> places{Place::real()};
  for (long p : primes) places.push_back(Place::prime(p));
  for (long a : grid)
    for (long b : grid) {
      o.require(global_product_check(a, b).even(), "product formula");
      for (const auto& v : places) {
        const int s = hilbert_symbol(a, b, v);
        o.require(s == hilbert_symbol(b, a, v), "symmetry");
        o.require(hilbert_symbol(a, -a, v) == 1, "(a,-a)");
        if (a != 1) o.require(hilbert_symbol(a, 1 - a, v) == 1, "(a,1-a)");
        for (long c : grid) o.require(hilbert_symbol(a, b * c, v) == s * hilbert_symbol(a, c, v), "bilinearity");
      }
    }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
  o.require(hilbert_symbol(-1, -1, Place::real()) == -1, "(-1,-1)_R");
  o.require(hilbert_symbol(3, 5, Place::prime(3)) == -1, "(3,5)_3");
  o.require(hilbert_symbol(3, 5, Place::prime(5)) == -1, "(3,5)_5");
  o.require(oracle::hilbert_by_search(3, 5, 3) == -1 && oracle::hilbert_by_search(3, 5, 5) == -1, "oracle spot");
  for (long a : grid)
    for (long b : grid) {
      o.require(hilbert_symbol(a, b, Place::real()) == oracle::hilbert_real(a, b), "real place");
      for (long p : primes)
        o.require(hilbert_symbol(a, b, Place::prime(p)) == oracle::hilbert_by_search(a, b, p),
                  "(" + std::to_string(a) + "," + std::to_string(b) + ")_" + std::to_string(p));
    }
  return o;
}

Outcome embeddings() {
  Outcome o;
  for (long a = -50; a <= 50; ++a) {
    if (a == 0 || is_square(Rational(a))) continue;
    const bool c4 = embeds_in_c4(a);
    o.require(c4 == is_sum_of_two_squares(Rational(a)), "c4 vs sums at " + std::to_string(a));
    o.require(c4 == oracle::sum_of_two_squares_search(a), "c4 vs search at " + std::to_string(a));
  }
  o.require(embeds_in_d4(2, 7), "(2,7)");
  o.require(!embeds_in_d4(2, 3), "(2,3)");
  const auto w = construct_d4_witness(2, 7);
  o.require(w.has_value(), "no (2,7) witness");
  if (w) {
    const auto& p = w->point;
    o.require(p.gamma * p.gamma == 2 * p.alpha * p.alpha + 7 * p.beta * p.beta, "conic point");
    o.require(w->closure.degree == 8, "closure degree");
    o.require(w->closure.group == fingerprint(catalog_group("D4")), "closure group");
    o.require(w->closure.closure_stable, "closure stable");
    o.require(w->contains_sqrt_b, "sqrt b");
    o.require(w->cyclic_over_ab, "cyclic over Q(sqrt ab)");
  }
  return o;
}

Outcome witt_tables() {
  Outcome o;
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const auto t = witt_table_finite_field(q);
    const auto iso = oracle::witt_by_isometry(q);
    const unsigned want = (q == 3 || q == 7 || q == 11) ? 4 : 2;
    const std::string at = "q=" + std::to_string(q);
    o.require(t.size == 4 && iso.size == 4, at + " size");
    o.require(t.exponent == want && iso.exponent == want, at + " exponent");
  }
  return o;
}

Outcome example1() {
  Outcome o;
  const auto opts = default_example1_options();
  const auto stress = stress_example1_grid();
  o.require(example1_suite(opts).all_pass(), "example1 suite");
  for (const auto* g : {&opts, &stress}) {
    const auto res = check_sampled_disjointness(g->linear_r, g->quadratic_bc);
    o.require(res.trivial, "intersection not trivial");
    const auto w = classes(res.w_generators), v = classes(res.v_generators);
    auto both = w;
    both.insert(both.end(), v.begin(), v.end());
    o.require(f2_rank(both) == f2_rank(w) + f2_rank(v), "F2 elimination finds a common class");
    o.require(f2_rank(w) == 2, "dim W");
  }
  const auto big = check_sampled_disjointness(stress.linear_r, stress.quadratic_bc);
  o.require(big.v_generators.size() >= 25, "stress grid too small");
  const auto small = check_sampled_disjointness(opts.linear_r, opts.quadratic_bc);
  const auto k = gaussian_rationals();
  const auto trace = parity_trace(small, factor(parse_kpoly("t-i", k)));
  o.require(!trace.member, "t-i reported in V");
  bool partner = false;
  for (const auto& e : trace.entries)
    for (std::size_t j = 0; j < e.partner_labels.size(); ++j)
      partner = partner || (e.partner_labels[j] == "irr:t+i" && e.partner_exponents_in_query[j] % 2 == 0);
  o.require(partner, "no t+i parity witness");
  const auto dep = parity_trace(small, factor(parse_kpoly("(t^2+1)*(t+1)", k)));
  o.require(dep.member, "(t^2+1)(t+1) not in V");
  return o;
}

Outcome prop2() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto w = real_cyclotomic_witness(5);
  o.require(w.degree == 8 && w.cyclic && w.contains_sqrt2 && w.roots_verified, "zeta32+ witness");
  o.require(w.group == fingerprint(catalog_group("Z8")), "zeta32+ group");
  const auto num = oracle::real_cyclotomic_minpoly_numeric(5);
  o.require(num.size() == w.minimal_polynomial.size(), "minpoly degree");
  for (std::size_t i = 0; i < num.size() && i < w.minimal_polynomial.size(); ++i)
    o.require(Rational(num[i]) == w.minimal_polynomial[i], "minpoly coefficient");
  o.require(power2_irreducible(Rational(2), 4), "X^16-2");
  o.require(eisenstein_binomial(2, 16, 2), "Eisenstein at 2");
  const auto z16 = catalog_group("Z16"), z8 = catalog_group("Z8");
  o.require(oracle::exponent_by_powers(quotient_group(z16, tower_series(z16).level(5))) == 16, "Z16/G(5)");
  o.require(oracle::exponent_by_powers(quotient_group(z8, tower_series(z8).level(4))) == 8, "Z8/G(4)");
  const auto levels = finite_tower_levels(3, 5);
  o.require(levels.size() == 5 && levels[4].group.exponent == 16 && levels[3].group.exponent == 8, "F3 levels");
  o.require(prop2_suite().all_pass(), "prop2 suite");
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

Outcome finite_towers() {
  Outcome o;
  const char* cyclic[] = {"trivial", "Z2", "Z4", "Z8"};
  for (std::uint64_t q : {3, 5}) {
    o.require(j1_fixed_classes(parse_fragment("F" + std::to_string(q))).dimension() == 1, "level-2 fixed classes");
    const auto levels = finite_tower_levels(q, 4);
    o.require(levels.size() == 4, "level count");
    for (const auto& l : levels) {
      const std::string at = "F" + std::to_string(q) + " level " + std::to_string(l.n);
      o.require(l.class_group_dimension == 1 && l.fixed.dimension() == 1, at + " classes");
      o.require(l.group == fingerprint(catalog_group(cyclic[l.n - 1])), at + " group");
      // count squares directly: half the nonzero elements
      const auto k = FiniteField::make(q, 1u << (l.n - 1));
      std::set<std::uint64_t> squares;
      if (k->order() <= 6561) {
        for (std::uint64_t x = 1; x < k->order(); ++x) squares.insert(k->mul(x, x));
        o.require(squares.size() == (k->order() - 1) / 2, at + " square count");
      }
      const FiniteFieldElement g(k, k->generator());
      o.require(!is_square(g) && is_square(g.pow(q) / g), at + " Frobenius fixes the class");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"group series catalog", groups_catalog},
      {"D4 series values", d4_values},
      {"closure dichotomy", lemma3_dichotomy},
      {"Galois criterion and conjugate stability", statement_prop1},
      {"Hilbert symbols", hilbert_grid},
      {"C4 and D4 embedding", embeddings},
      {"Witt tables", witt_tables},
      {"sampled disjointness over Q(i)(t)", example1},
      {"exponent witnesses", prop2},
      {"finite-field towers", finite_towers},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %2zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds_since(t0), o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
