#include "quadtower/report.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace quadtower {

nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json j{{"check", c.check},   {"paper_ref", c.paper_ref}, {"pass", c.pass},
                   {"witness", c.witness}, {"samples", c.samples},    {"millis", c.millis}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::merge(Report other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.check < b.check; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(quadtower::to_json(c));
  return {{"suite", suite}, {"pass", all_pass()}, {"checks", arr}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    out << (c.pass ? "PASS " : "FAIL ") << c.check << "  (" << static_cast<long long>(c.millis + 0.5) << " ms)";
    if (!c.note.empty()) out << "  " << c.note;
    out << "\n";
  }
  out << suite << ": " << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

CheckResult timed_check(std::string name, std::string paper_ref, const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.check = std::move(name);
  c.paper_ref = std::move(paper_ref);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.note = std::string("exception: ") + e.what();
  }
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

namespace {

void require_rational(const TowerFragment& f) {
  if (f.kind() != BaseKind::rationals) throw std::invalid_argument(f.descriptor() + " is not a rational fragment");
}

void require_generator_subfield(const TowerFragment& f, const QuadraticSubfield& l) {
  if (l.mask == 0 || l.mask >= f.level2()->degree() || (l.mask & (l.mask - 1)) != 0)
    throw std::invalid_argument("L must be Q(sqrt a) for a generator a of " + f.descriptor());
}

std::vector<unsigned> every_mask(const TowerFragment& f) {
  std::vector<unsigned> out(f.level2()->degree());
  for (unsigned m = 0; m < out.size(); ++m) out[m] = m;
  return out;
}

bool fixed_by(const MultiquadElement& c, const std::vector<unsigned>& masks) {
  return std::all_of(masks.begin(), masks.end(), [&](unsigned m) { return is_square(c.conjugate(m) / c); });
}

std::string tag(const TowerFragment& f, const QuadraticSubfield& l) {
  return "[" + f.descriptor() + ", " + l.to_string(f) + "]";
}

/// Elements of F_(q^2)*, all of them when there are at most 4096.
std::vector<FiniteFieldElement> finite_samples(const FiniteFieldPtr& k) {
  std::vector<FiniteFieldElement> out;
  const std::uint64_t n = std::min<std::uint64_t>(k->order(), 4097);
  for (std::uint64_t v = 1; v < n; ++v) out.emplace_back(k, v);
  return out;
}

}  // namespace

Report lemma12_check(const TowerFragment& f, const QuadraticSubfield& l,
                     const std::vector<MultiquadElement>& sample_b) {
  require_rational(f);
  require_generator_subfield(f, l);
  const auto fixing = l.fixing_masks(f);
  const auto masks = every_mask(f);
  Report r{"lemmas", {}};

  r.checks.push_back(timed_check("inclusion.norm-ratio" + tag(f, l), "L(2) is contained in F(3): sigma(b) b / b^2 = N(b)/b^2",
                                 [&](CheckResult& c) {
    std::size_t checked = 0, skipped = 0;
    c.pass = true;
    for (const auto& b : sample_b) {
      if (b.is_zero()) throw std::invalid_argument("zero sample");
      for (unsigned m : fixing)
        if (!(b.conjugate(m) == b)) throw std::invalid_argument(b.to_string() + " is not in " + l.to_string(f));
      const MultiquadElement norm = b * b.conjugate(l.mask);
      const MultiquadElement norm_ratio = norm / (b * b);
      nlohmann::json s{{"b", b.to_string()}, {"norm", norm.to_string()}};
      bool ok = norm.is_rational();
      for (unsigned m : masks) {
        const MultiquadElement ratio = b.conjugate(m) / b;
        const bool on_l = std::find(fixing.begin(), fixing.end(), m) != fixing.end();
        if (on_l ? !(ratio == MultiquadElement::from_rational(f.level2(), 1)) : !(ratio == norm_ratio)) ok = false;
      }
      if (!is_square(norm_ratio)) {
        // N(b) is a square in F(2) but not in this fragment's K.
        s["status"] = "skipped: norm class outside the fragment";
        ++skipped;
      } else {
        const bool fixed = fixed_by(b, masks);
        ok = ok && fixed;
        s["status"] = fixed ? "fixed" : "not fixed";
        ++checked;
      }
      if (!ok) c.pass = false;
      c.samples.push_back(s);
    }
    c.witness = {{"checked", checked}, {"skipped", skipped}};
    if (skipped) c.note = std::to_string(skipped) + " sample(s) skipped";
    if (checked == 0) c.note = "vacuous";
  }));

  r.checks.push_back(timed_check("inclusion.subgroup-fixed" + tag(f, l), "F(3) is contained in L(3)",
                                 [&](CheckResult& c) {
    std::vector<MultiquadElement> pool = default_candidate_pool(f, sample_b);
    const J1Result j = j1_fixed_classes(f, pool);
    std::size_t fixed_members = 0;
    c.pass = true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (std::find(j.rejected.begin(), j.rejected.end(), j.pool[i]) != j.rejected.end()) continue;
      ++fixed_members;
      const bool ok = fixed_by(pool[i], fixing);
      if (!ok) c.pass = false;
      c.samples.push_back({{"class", j.pool[i]}, {"fixed_over_L", ok}});
    }
    c.witness = {{"pool_size", pool.size()}, {"fixed_dimension", j.fixed.dimension()}, {"fixed_pool_members", fixed_members}};
  }));
  return r;
}

Report lemma12_check(const TowerFragment& f) {
  if (f.kind() != BaseKind::finite_field) throw std::invalid_argument(f.descriptor() + " is not a finite fragment");
  const auto& k = f.level2_finite();
  const std::uint64_t q = f.base_finite()->order();
  Report r{"lemmas", {}};
  const std::string t = "[" + f.descriptor() + ", " + k->to_string() + "]";
  r.checks.push_back(timed_check("inclusion.norm-ratio" + t, "L(2) is contained in F(3): sigma(b) b / b^2 = N(b)/b^2",
                                 [&](CheckResult& c) {
    const auto elems = finite_samples(k);
    std::size_t bad = 0;
    for (const auto& b : elems)
      if (!is_square(b.pow(q) / b)) ++bad;
    c.pass = bad == 0;
    c.witness = {{"elements_checked", elems.size()}, {"failures", bad}};
  }));
  r.checks.push_back(timed_check("inclusion.subgroup-fixed" + t, "F(3) is contained in L(3)", [&](CheckResult& c) {
    // L = F(2) here, so the subgroup fixing L is trivial and J1 is the whole class group.
    const auto level = finite_level(q, 2);
    c.pass = level.fixed.dimension() == level.class_group_dimension && level.class_group_dimension == 1;
    c.witness = {{"class_group_dimension", level.class_group_dimension}, {"fixed_dimension", level.fixed.dimension()}};
  }));
  return r;
}

Report prop1_check(const TowerFragment& f, const QuadraticSubfield& l, const std::vector<MultiquadElement>& samples) {
  require_rational(f);
  require_generator_subfield(f, l);
  for (const auto& g : samples)
    if (!is_quadratic_ext_galois_over(f, l, g))
      throw std::invalid_argument("K(sqrt " + g.to_string() + ")/L is not Galois");
  Report r{"prop1", {}};
  r.checks.push_back(timed_check("conjugate-stability" + tag(f, l),
                                 "L(3)/F is Galois: tau(gamma) stays in the fixed classes over L, tau trivial or not on L",
                                 [&](CheckResult& c) {
    c.pass = true;
    std::size_t pairs = 0;
    for (const auto& g : samples) {
      nlohmann::json s{{"gamma", g.to_string()}, {"images", nlohmann::json::array()}};
      for (unsigned tau : every_mask(f)) {
        const MultiquadElement image = g.conjugate(tau);
        const bool ok = is_quadratic_ext_galois_over(f, l, image);
        const bool trivial_on_l = std::popcount(tau & l.mask) % 2 == 0;
        s["images"].push_back({{"tau", tau}, {"case", trivial_on_l ? "identity on L" : "nontrivial on L"},
                               {"image", image.to_string()}, {"galois_over_L", ok}});
        if (!ok) c.pass = false;
        ++pairs;
      }
      c.samples.push_back(s);
    }
    c.witness = {{"pairs", pairs}};
    if (samples.empty()) c.note = "vacuous";
  }));
  return r;
}

Report prop1_check(const TowerFragment& f) {
  if (f.kind() != BaseKind::finite_field) throw std::invalid_argument(f.descriptor() + " is not a finite fragment");
  const auto& k = f.level2_finite();
  const std::uint64_t q = f.base_finite()->order();
  Report r{"prop1", {}};
  r.checks.push_back(timed_check("conjugate-stability[" + f.descriptor() + "]",
                                 "L(3)/F is Galois: tau(gamma) stays in the fixed classes over L",
                                 [&](CheckResult& c) {
    std::size_t checked = 0, bad = 0;
    for (const auto& g : finite_samples(k)) {
      if (is_square(g)) continue;
      ++checked;
      if (!is_quadratic_ext_galois(f, g) || !is_quadratic_ext_galois(f, g.pow(q))) ++bad;
    }
    c.pass = checked > 0 && bad == 0;
    c.witness = {{"nonsquares_checked", checked}, {"failures", bad}};
  }));
  return r;
}

std::vector<MultiquadElement> sample_elements(const TowerFragment& f) {
  require_rational(f);
  const auto& k = f.level2();
  std::vector<MultiquadElement> out;
  auto add = [&](const MultiquadElement& x) {
    if (!x.is_zero() && !is_square(x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (int c : {3, 5, -1, 6}) add(MultiquadElement::from_rational(k, c));
  for (unsigned m = 1; m < k->degree(); ++m)
    for (int v : {1, 2})
      for (int u = -2; u <= 3; ++u)
        add(MultiquadElement::from_rational(k, u) + MultiquadElement::basis(k, m) * Rational(v));
  if (k->rank() >= 2) add(MultiquadElement::from_rational(k, 1) + MultiquadElement::root(k, 0) + MultiquadElement::root(k, 1));
  return out;
}

}  // namespace quadtower
