#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quadtower/twogroup.hpp"

namespace quadtower {

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_order(std::size_t n) {
  if (n > kMaxGroupOrder) throw std::invalid_argument("group order exceeds 1024");
  if (!std::has_single_bit(n)) throw std::invalid_argument("group order " + std::to_string(n) + " is not a power of 2");
}

}  // namespace

FiniteTwoGroup FiniteTwoGroup::from_permutations(const std::vector<Permutation>& generators,
                                                 std::string name) {
  std::size_t degree = 1;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  if (degree > kMaxPermutationDegree) throw std::invalid_argument("permutation degree exceeds 64");
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    Permutation p = identity_permutation(degree);
    std::vector<bool> seen(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] >= g.size() || seen[g[i]]) throw std::invalid_argument("not a permutation");
      seen[g[i]] = true;
      p[i] = g[i];
    }
    gens.push_back(std::move(p));
  }

  FiniteTwoGroup G;
  G.name_ = std::move(name);
  std::map<Permutation, Element> index;
  G.perms_.push_back(identity_permutation(degree));
  index.emplace(G.perms_[0], 0);
  std::vector<std::pair<Element, std::size_t>> parent{{0, 0}};
  std::vector<std::vector<Element>> by_gen;
  for (std::size_t x = 0; x < G.perms_.size(); ++x) {
    by_gen.emplace_back(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Permutation y = compose(G.perms_[x], gens[j]);
      auto [it, fresh] = index.emplace(y, static_cast<Element>(G.perms_.size()));
      if (fresh) {
        if (G.perms_.size() >= kMaxGroupOrder) throw std::invalid_argument("group order exceeds 1024");
        G.perms_.push_back(std::move(y));
        parent.emplace_back(static_cast<Element>(x), j);
      }
      by_gen[x][j] = it->second;
    }
  }
  const std::size_t n = G.perms_.size();
  check_order(n);
  G.table_.assign(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    G.table_[a][0] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const auto [pb, j] = parent[b];
      G.table_[a][b] = by_gen[G.table_[a][pb]][j];
    }
  }
  for (const auto& g : gens) G.generators_.push_back(index.at(g));
  G.finish();
  return G;
}

FiniteTwoGroup FiniteTwoGroup::from_table(std::vector<std::vector<Element>> table,
                                          std::vector<Element> generators, std::string name) {
  const std::size_t n = table.size();
  check_order(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw std::invalid_argument("table not square");
    if (table[a][0] != a || table[0][a] != a) throw std::invalid_argument("0 is not the identity");
    std::vector<bool> seen(n);
    for (auto x : table[a]) {
      if (x >= n || seen[x]) throw std::invalid_argument("table row is not a permutation");
      seen[x] = true;
    }
  }
  for (auto g : generators)
    if (g >= n) throw std::invalid_argument("generator out of range");
  FiniteTwoGroup G;
  G.name_ = std::move(name);
  G.table_ = std::move(table);
  G.generators_ = std::move(generators);
  G.finish();
  return G;
}

void FiniteTwoGroup::finish() {
  const std::size_t n = table_.size();
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }
}

Element FiniteTwoGroup::commutator(Element a, Element b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

unsigned FiniteTwoGroup::element_order(Element a) const {
  unsigned k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

Subgroup::Subgroup(std::size_t parent_order, const std::vector<Element>& members)
    : mask_(parent_order) {
  for (auto x : members) {
    if (x >= parent_order) throw std::invalid_argument("subgroup member out of range");
    mask_[x] = true;
  }
  for (std::size_t x = 0; x < parent_order; ++x)
    if (mask_[x]) members_.push_back(static_cast<Element>(x));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Element x) { return other.contains(x); });
}

Subgroup whole_group(const FiniteTwoGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g.order(), all);
}

Subgroup trivial_subgroup(const FiniteTwoGroup& g) { return Subgroup(g.order(), {0}); }

Subgroup generated_subgroup(const FiniteTwoGroup& g, const std::vector<Element>& seeds) {
  std::vector<bool> in(g.order());
  std::vector<Element> list{0};
  in[0] = true;
  std::vector<Element> gens;
  for (auto s : seeds) {
    if (s >= g.order()) throw std::invalid_argument("seed outside the group");
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto s : gens) {
      const Element y = g.mul(list[i], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return Subgroup(g.order(), list);
}

bool is_normal(const FiniteTwoGroup& g, const Subgroup& h) {
  for (auto x : g.generators())
    for (auto y : h.members())
      if (!h.contains(g.mul(g.mul(g.inv(x), y), x))) return false;
  return true;
}

Subgroup commutator_subgroup(const FiniteTwoGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<bool> seen(g.order());
  std::vector<Element> seeds;
  for (auto x : a.members())
    for (auto y : b.members()) {
      const Element c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        seeds.push_back(c);
      }
    }
  return generated_subgroup(g, seeds);
}

Subgroup center(const FiniteTwoGroup& g) {
  std::vector<Element> z;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    if (std::all_of(g.generators().begin(), g.generators().end(),
                    [&](Element s) { return g.mul(e, s) == g.mul(s, e); }))
      z.push_back(e);
  }
  return Subgroup(g.order(), z);
}

Subgroup series_step(const Subgroup& h, const FiniteTwoGroup& g) {
  if (!is_normal(g, h)) throw std::invalid_argument("series_step: subgroup is not normal");
  std::vector<bool> seen(g.order());
  std::vector<Element> seeds;
  auto add = [&](Element c) {
    if (!seen[c]) {
      seen[c] = true;
      seeds.push_back(c);
    }
  };
  for (auto x : h.members()) {
    add(g.mul(x, x));
    for (std::size_t y = 0; y < g.order(); ++y) add(g.commutator(x, static_cast<Element>(y)));
  }
  return generated_subgroup(g, seeds);
}

FiniteTwoGroup quotient_group(const FiniteTwoGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  constexpr Element kUnset = 0xffff;
  std::vector<Element> coset(g.order(), kUnset);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (auto m : n.members()) coset[g.mul(static_cast<Element>(x), m)] = id;
  }
  std::vector<std::vector<Element>> table(reps.size(), std::vector<Element>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) table[i][j] = coset[g.mul(reps[i], reps[j])];
  std::vector<Element> gens;
  for (auto s : g.generators()) gens.push_back(coset[s]);
  return FiniteTwoGroup::from_table(std::move(table), std::move(gens));
}

unsigned exponent(const FiniteTwoGroup& g) {
  unsigned e = 1;
  for (std::size_t x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(static_cast<Element>(x)));
  return e;
}

std::vector<Subgroup> lower_central_series(const FiniteTwoGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  const Subgroup all = series.front();
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

unsigned nilpotency_class(const FiniteTwoGroup& g) {
  const auto series = lower_central_series(g);
  if (series.back().order() != 1) throw std::logic_error("group is not nilpotent");
  return static_cast<unsigned>(series.size() - 1);
}

bool is_abelian(const FiniteTwoGroup& g) {
  for (auto a : g.generators())
    for (auto b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<unsigned> abelian_invariants(const FiniteTwoGroup& g) {
  const Subgroup derived = commutator_subgroup(g, whole_group(g), whole_group(g));
  const FiniteTwoGroup a = quotient_group(g, derived);
  // rank_at_least[k] = #{cyclic factors of order >= 2^k} = log2 |A[2^k]| - log2 |A[2^(k-1)]|
  std::vector<unsigned> log_torsion{0};
  for (unsigned k = 1; log_torsion.back() < std::bit_width(a.order()) - 1; ++k) {
    std::size_t count = 0;
    for (std::size_t x = 0; x < a.order(); ++x)
      if ((1u << k) % a.element_order(static_cast<Element>(x)) == 0) ++count;
    log_torsion.push_back(static_cast<unsigned>(std::bit_width(count) - 1));
  }
  std::vector<unsigned> out;
  for (std::size_t k = 1; k < log_torsion.size(); ++k) {
    const unsigned at_least_k = log_torsion[k] - log_torsion[k - 1];
    const unsigned at_least_next = k + 1 < log_torsion.size() ? log_torsion[k + 1] - log_torsion[k] : 0;
    for (unsigned c = 0; c < at_least_k - at_least_next; ++c) out.push_back(1u << k);
  }
  return out;
}

std::string Fingerprint::to_string() const {
  std::ostringstream s;
  s << "order " << order << ", exponent " << exponent << ", class " << nilpotency_class
    << ", abelianization [";
  for (std::size_t i = 0; i < abelian_invariants.size(); ++i) s << (i ? ", " : "") << abelian_invariants[i];
  s << "], " << involutions << " involutions";
  return s.str();
}

Fingerprint fingerprint(const FiniteTwoGroup& g) {
  Fingerprint f{g.order(), exponent(g), nilpotency_class(g), abelian_invariants(g), 0};
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<Element>(x)) == 2) ++f.involutions;
  return f;
}

const Subgroup& SeriesReport::level(unsigned n) const {
  if (n == 0) throw std::out_of_range("series levels start at 1");
  return chain[std::min<std::size_t>(n, chain.size()) - 1];
}

std::string SeriesReport::to_string() const {
  std::ostringstream s;
  s << "n  |G(n)|  |G/G(n)|  exponent  class\n";
  for (const auto& l : levels)
    s << l.n << "  " << l.subgroup_order << "  " << l.quotient_order << "  " << l.quotient_exponent
      << "  " << l.quotient_class << "\n";
  s << "stable from n = " << chain.size() << "\n";
  return s.str();
}

SeriesReport tower_series(const FiniteTwoGroup& g) {
  SeriesReport r;
  r.chain.push_back(whole_group(g));
  for (;;) {
    Subgroup next = series_step(r.chain.back(), g);
    if (next == r.chain.back()) break;
    r.chain.push_back(std::move(next));
  }
  for (unsigned n = 1; n <= r.chain.size(); ++n) {
    const FiniteTwoGroup q = quotient_group(g, r.level(n));
    r.levels.push_back({n, r.level(n).order(), q.order(), exponent(q), nilpotency_class(q)});
  }
  return r;
}

bool StructuralReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const StructuralCheck& c) { return c.pass; });
}

StructuralReport structural_checks(const FiniteTwoGroup& g) {
  StructuralReport rep;
  const SeriesReport series = tower_series(g);
  const Subgroup all = whole_group(g);
  {
    const Subgroup d = commutator_subgroup(g, series.level(2), series.level(2));
    rep.checks.push_back({"derived-in-fourth", 2, d.is_subset_of(series.level(4)),
                          "|[G(2),G(2)]| = " + std::to_string(d.order()) +
                              ", |G(4)| = " + std::to_string(series.level(4).order())});
  }
  const unsigned top = std::max<unsigned>(static_cast<unsigned>(series.chain.size()), 5);
  for (unsigned n = 1; n <= top; ++n) {
    const Subgroup c = commutator_subgroup(g, series.level(n), all);
    rep.checks.push_back({"central", n, c.is_subset_of(series.level(n + 1)),
                          "|[G(n),G]| = " + std::to_string(c.order())});
    const FiniteTwoGroup q = quotient_group(g, series.level(n));
    const unsigned e = exponent(q);
    rep.checks.push_back({"exponent", n, (1u << (n - 1)) % e == 0,
                          "exp(G/G(n)) = " + std::to_string(e)});
    const unsigned cls = nilpotency_class(q);
    rep.checks.push_back({"class", n, cls <= n - 1, "class(G/G(n)) = " + std::to_string(cls)});
  }
  return rep;
}

}  // namespace quadtower
