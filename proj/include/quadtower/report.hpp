#pragma once

// Verification harness: named checks with witnesses, sample sets and
// timings, grouped into suites that the CLI runs.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quadtower/funcfield.hpp"
#include "quadtower/tower.hpp"

namespace quadtower {

struct CheckResult {
  std::string check;
  std::string paper_ref;  // anchor in the source argument
  bool pass = false;
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json samples = nlohmann::json::array();
  double millis = 0;
  std::string note;  // e.g. "vacuous", skipped samples
};

nlohmann::json to_json(const CheckResult& c);

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Appends other's checks and keeps them ordered by check name.
  void merge(Report other);
  nlohmann::json to_json() const;
  /// One line per check: PASS/FAIL, name, millis, note.
  std::string to_text() const;
};

/// Runs body, timing it; exceptions become a failing check with the message as note.
CheckResult timed_check(std::string name, std::string paper_ref,
                        const std::function<void(CheckResult&)>& body);

// -- per-fragment checks --

/// For b in L: every sigma-ratio of b is a square in K (sigma trivial on L:
/// ratio 1; otherwise N_(L/F)(b)/b^2), so [b] lies in the fixed classes; then
/// every fixed class is also fixed by the subgroup fixing L. Samples whose
/// norm class is not a square in the fragment's K are listed as skipped.
Report lemma12_check(const TowerFragment& f, const QuadraticSubfield& l,
                     const std::vector<MultiquadElement>& sample_b);
/// Finite fragments: every b in F_(q^2)* is checked.
Report lemma12_check(const TowerFragment& f);

/// Each gamma must make K(sqrt gamma)/L Galois; then tau(gamma) does too for
/// every automorphism tau of the fragment. Throws std::invalid_argument on a
/// bad sample.
Report prop1_check(const TowerFragment& f, const QuadraticSubfield& l,
                   const std::vector<MultiquadElement>& samples);
/// Finite fragments: every nonsquare gamma in F_(q^2).
Report prop1_check(const TowerFragment& f);

/// Shipped samples for a rational fragment: small u + v sqrt a_i combinations.
std::vector<MultiquadElement> sample_elements(const TowerFragment& f);

// -- suites --

struct Example1Options {
  std::vector<Rational> linear_r;              // t + r
  std::vector<QuadraticParams> quadratic_bc;   // t^2 + b t + c
  bool stress = true;                          // also run the large grid
  bool search_constant_field = true;
};

Example1Options default_example1_options();
/// >= 25 V-generators.
Example1Options stress_example1_grid();

Report statement_suite();
Report lemmas_suite(const std::vector<TowerFragment>& fragments);
Report example1_suite(const Example1Options& options = default_example1_options());
Report prop1_suite(const std::vector<TowerFragment>& fragments);
Report prop2_suite();
Report groups_suite();
Report symbols_suite();

inline const std::vector<std::string> kSuiteNames{"lemmas", "example1", "prop1", "prop2", "groups", "symbols", "all"};

/// fragment: nullopt runs each suite on its default fragments.
Report run_suite(std::string_view name, const std::optional<TowerFragment>& fragment = std::nullopt);

}  // namespace quadtower
