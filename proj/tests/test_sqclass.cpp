#include <doctest.h>

#include <set>

#include <random>

#include "quadtower/sqclass.hpp"

using namespace quadtower;

namespace {

SquareClassSpace span(std::initializer_list<SquareClassVector> vs) { return span_of(std::vector<SquareClassVector>(vs)); }

/// Every F2 combination of the generators, by enumeration.
std::set<SquareClassVector> enumerate_span(const std::vector<SquareClassVector>& gens) {
  std::set<SquareClassVector> out;
  for (unsigned s = 0; s < (1u << gens.size()); ++s) {
    SquareClassVector v;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (s >> i & 1) v += gens[i];
    out.insert(v);
  }
  return out;
}

SquareClassVector random_vector(std::mt19937& rng, int labels) {
  SquareClassVector v;
  std::bernoulli_distribution coin(0.35);
  for (int i = 0; i < labels; ++i)
    if (coin(rng)) v.toggle("p:" + std::to_string(2 + i));
  return v;
}

}  // namespace

TEST_CASE("vectors are sets of labels") {
  SquareClassVector v{"p:3", "p:2", "p:3"};
  CHECK(v == SquareClassVector{"p:2"});
  v.toggle("p:2");
  CHECK(v.is_identity());
  SquareClassVector w{"p:2", "p:3"};
  CHECK(w.weight() == 2);
  CHECK(w.pivot() == "p:2");
  CHECK((w + SquareClassVector{"p:3"}) == SquareClassVector{"p:2"});
}

TEST_CASE("insert and test independence") {
  const auto s = span({{"p:2"}, {"p:3"}});
  CHECK(insert_and_test_independent(s, {"p:2", "p:3"}).second == Independence::dependent);
  auto [s5, flag] = insert_and_test_independent(s, {"p:5"});
  CHECK(flag == Independence::independent);
  CHECK(s5.dimension() == 3);
  CHECK(insert_and_test_independent(SquareClassSpace{}, SquareClassVector{}).second == Independence::dependent);
}

TEST_CASE("membership") {
  const auto w = span({{"irr:t-i"}, {"irr:t+2*i"}});
  CHECK(membership(w, {"irr:t-i", "irr:t+2*i"}));
  CHECK_FALSE(membership(w, {"irr:t+i"}));
  CHECK(membership(SquareClassSpace{}, SquareClassVector{}));
}

TEST_CASE("intersection witness") {
  CHECK(intersection_trivial(span({{"irr:t-i"}, {"irr:t+2*i"}}), span({{"irr:t+1"}, {"irr:t-2"}})));
  const auto w = intersection_witness(span({{"p:2"}, {"p:3"}}), span({{"p:2", "p:3"}, {"p:5"}}));
  REQUIRE(w);
  CHECK(*w == SquareClassVector{"p:2", "p:3"});
  CHECK(intersection_trivial(SquareClassSpace{}, span({{"p:7"}})));
}

TEST_CASE("echelon invariant and membership agree with enumeration") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SquareClassVector> gens;
    SquareClassSpace s;
    for (int i = 0; i < 5; ++i) {
      gens.push_back(random_vector(rng, 7));
      const auto before = enumerate_span(std::vector<SquareClassVector>(gens.begin(), gens.end() - 1));
      auto [next, flag] = insert_and_test_independent(s, gens.back());
      CHECK((flag == Independence::dependent) == (before.count(gens.back()) == 1));
      s = next;
    }
    // pivots appear in exactly one basis vector
    for (const auto& b : s.basis()) {
      int hits = 0;
      for (const auto& c : s.basis()) hits += c.contains(b.pivot()) ? 1 : 0;
      CHECK(hits == 1);
    }
    const auto all = enumerate_span(gens);
    CHECK(all.size() == (std::size_t{1} << s.dimension()));
    for (int probe = 0; probe < 10; ++probe) {
      const auto v = random_vector(rng, 7);
      CHECK(membership(s, v) == (all.count(v) == 1));
    }
  }
}

TEST_CASE("intersection agrees with enumeration") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SquareClassVector> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(random_vector(rng, 6));
    for (int i = 0; i < 3; ++i) b.push_back(random_vector(rng, 6));
    const auto ea = enumerate_span(a), eb = enumerate_span(b);
    std::size_t common = 0;
    for (const auto& v : ea) common += eb.count(v);
    const auto w = intersection_witness(span_of(a), span_of(b));
    CHECK((common == 1) == !w.has_value());
    if (w) {
      CHECK_FALSE(w->is_identity());
      CHECK(ea.count(*w) == 1);
      CHECK(eb.count(*w) == 1);
    }
  }
}
