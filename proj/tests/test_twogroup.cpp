#include <doctest.h>

#include <set>

#include <random>

#include "oracles.hpp"
#include "quadtower/twogroup.hpp"

using namespace quadtower;

TEST_CASE("parsing and catalog") {
  const auto d4 = catalog_group("D4");
  CHECK(d4.order() == 8);
  CHECK(parse_group("(1 2 3 4),(1 3)").order() == 8);
  CHECK(parse_group("(1,2,4,7)(3,6,8,5),(1,3,4,8)(2,5,7,6)").order() == 8);
  CHECK(permutation_to_string(parse_generators("(1 2 3)")[0]) == "(1 2 3)");
  CHECK_THROWS_AS(parse_group("(1 2 3)"), std::invalid_argument);  // order 3
  CHECK_THROWS_AS(parse_group("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generators("(1 1)"), std::invalid_argument);
  CHECK(catalog_group("trivial").order() == 1);
}

TEST_CASE("fingerprints") {
  CHECK(fingerprint(catalog_group("D4")).to_string() ==
        "order 8, exponent 4, class 2, abelianization [2, 2], 5 involutions");
  CHECK(fingerprint(catalog_group("Q8")).involutions == 1);
  CHECK(fingerprint(catalog_group("SD16")).exponent == 8);
  CHECK(fingerprint(catalog_group("SD16")).nilpotency_class == 3);
  CHECK(fingerprint(catalog_group("M4(2)")).abelian_invariants == std::vector<unsigned>{2, 4});
  CHECK(fingerprint(catalog_group("Z4xZ4")).abelian_invariants == std::vector<unsigned>{4, 4});
}

TEST_CASE("exponent, class and centre against brute force") {
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    CHECK_MESSAGE(exponent(g) == oracle::exponent_by_powers(g), name);
    CHECK_MESSAGE(nilpotency_class(g) == oracle::class_by_upper_series(g), name);
    CHECK_MESSAGE(oracle::to_members(center(g), g.order()) == oracle::center_by_search(g), name);
  }
}

TEST_CASE("first series step is the Frattini subgroup") {
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    const auto phi = series_step(whole_group(g), g);
    CHECK_MESSAGE(oracle::to_members(phi, g.order()) == oracle::frattini(g), name);
  }
}

TEST_CASE("series steps are the smallest admissible normal subgroups") {
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    const auto series = tower_series(g);
    for (std::size_t i = 0; i + 1 < series.chain.size(); ++i) {
      const auto h = oracle::to_members(series.chain[i], g.order());
      CHECK_MESSAGE(oracle::to_members(series.chain[i + 1], g.order()) == oracle::series_step_by_search(g, h), name,
                    " step ", i + 1);
    }
  }
}

TEST_CASE("D4 series values") {
  const auto g = catalog_group("D4");
  const auto s = tower_series(g);
  CHECK(s.level(1).order() == 8);
  CHECK(s.level(2) == center(g));
  CHECK(s.level(2).order() == 2);
  CHECK(s.level(3).order() == 1);
  CHECK(s.level(7).order() == 1);
  const auto g2 = fingerprint(quotient_group(g, s.level(2)));
  CHECK(g2 == fingerprint(catalog_group("C2^2")));
  const auto g3 = quotient_group(g, s.level(3));
  CHECK(exponent(g3) == 4);
  CHECK(nilpotency_class(g3) == 2);
}

TEST_CASE("quotients") {
  const auto g = catalog_group("Z4xZ4");
  const auto phi = series_step(whole_group(g), g);
  const auto q = quotient_group(g, phi);
  CHECK(q.order() == 4);
  CHECK(exponent(q) == 2);
  // a non-normal subgroup of D4
  const auto d4 = catalog_group("D4");
  for (Element x = 1; x < d4.order(); ++x) {
    const auto h = generated_subgroup(d4, {x});
    if (!is_normal(d4, h)) {
      CHECK_THROWS_AS(quotient_group(d4, h), std::invalid_argument);
      CHECK_THROWS_AS(series_step(h, d4), std::invalid_argument);
      break;
    }
  }
}

TEST_CASE("structural checks pass on the catalog") {
  for (const auto& name : catalog_names()) {
    const auto rep = structural_checks(catalog_group(name));
    CHECK_MESSAGE(rep.all_pass(), name);
    std::set<std::string> kinds;
    for (const auto& c : rep.checks) kinds.insert(c.name);
    CHECK(kinds == std::set<std::string>{"derived-in-fourth", "central", "exponent", "class"});
  }
}

TEST_CASE("series properties on random subgroups") {
  std::mt19937 rng(4242);
  const auto names = catalog_names();
  for (int trial = 0; trial < 60; ++trial) {
    const auto big = catalog_group(names[rng() % names.size()]);
    if (big.order() < 2) continue;
    std::vector<Permutation> gens;
    const auto perms = big.permutations();
    for (int i = 0; i < 2; ++i) gens.push_back(perms[rng() % perms.size()]);
    const auto g = FiniteTwoGroup::from_permutations(gens);
    const auto s = tower_series(g);
    CHECK(s.chain.front().order() == g.order());
    CHECK(s.chain.back().order() == 1);
    for (std::size_t i = 0; i + 1 < s.chain.size(); ++i) {
      CHECK(s.chain[i + 1].is_subset_of(s.chain[i]));
      CHECK(is_normal(g, s.chain[i + 1]));
      // G(n)/G(n+1) elementary abelian and central in G/G(n+1)
      for (auto x : s.chain[i].members()) {
        CHECK(s.chain[i + 1].contains(g.mul(x, x)));
        for (Element y = 0; y < g.order(); ++y) CHECK(s.chain[i + 1].contains(g.commutator(x, y)));
      }
    }
    CHECK(structural_checks(g).all_pass());
  }
}

TEST_CASE("the engine refuses large inputs") {
  std::string c2_11;
  for (int i = 0; i < 11; ++i) c2_11 += (i ? "," : "") + ("(" + std::to_string(2 * i + 1) + " " + std::to_string(2 * i + 2) + ")");
  CHECK_THROWS_AS(parse_group(c2_11), std::invalid_argument);
  std::string big;
  for (int i = 1; i <= 65; ++i) big += (i == 1 ? "(" : " ") + std::to_string(i);
  CHECK_THROWS(parse_generators(big + ")"));
}
