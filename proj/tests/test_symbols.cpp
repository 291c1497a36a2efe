#include <doctest.h>

#include "oracles.hpp"
#include "quadtower/symbols.hpp"

using namespace quadtower;

namespace {

const std::vector<long> kGrid{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10};
const std::vector<long> kPrimes{2, 3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("places") {
  CHECK(parse_place("real").is_real());
  CHECK(parse_place("inf").is_real());
  CHECK(parse_place("7") == Place::prime(7));
  CHECK_THROWS_AS(Place::prime(9), std::invalid_argument);
  CHECK_THROWS_AS(parse_place("x"), std::invalid_argument);
}

TEST_CASE("spot values") {
  CHECK(hilbert_symbol(-1, -1, Place::real()) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::prime(2)) == -1);
  CHECK(hilbert_symbol(3, 5, Place::prime(3)) == -1);
  CHECK(hilbert_symbol(3, 5, Place::prime(5)) == -1);
  CHECK(hilbert_symbol(2, 7, Place::prime(7)) == 1);
  CHECK(hilbert_symbol(make_rational(4, 9), -7, Place::prime(7)) == 1);
  CHECK_THROWS(hilbert_symbol(0, 3, Place::real()));
}

TEST_CASE("local symbols agree with exhaustive solvability") {
  for (long a : kGrid)
    for (long b : kGrid) {
      CHECK(hilbert_symbol(a, b, Place::real()) == oracle::hilbert_real(a, b));
      for (long p : kPrimes)
        CHECK_MESSAGE(hilbert_symbol(a, b, Place::prime(p)) == oracle::hilbert_by_search(a, b, p), "(", a, ",", b,
                      ")_", p);
    }
  for (long a : {7L, -7L, 11L, 13L, -26L, 22L})
    for (long b : {3L, -1L, 7L, 2L})
      for (long p : kPrimes)
        CHECK(hilbert_symbol(a, b, Place::prime(p)) == oracle::hilbert_by_search(a, b, p));
}

TEST_CASE("symmetry, bilinearity, Steinberg and the product formula") {
  std::vector<Place> places{Place::real()};
  for (long p : kPrimes) places.push_back(Place::prime(p));
  for (long a : kGrid)
    for (long b : kGrid) {
      const auto check = global_product_check(a, b);
      CHECK(check.even());
      for (const auto& v : places) {
        CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
        CHECK(hilbert_symbol(a, -a, v) == 1);
        if (a != 1) CHECK(hilbert_symbol(a, 1 - a, v) == 1);
        for (long c : kGrid) CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
      }
    }
}

TEST_CASE("C4 embedding") {
  CHECK(embeds_in_c4(2));
  CHECK(embeds_in_c4(5));
  CHECK_FALSE(embeds_in_c4(3));
  CHECK_FALSE(embeds_in_c4(-1));
  CHECK_THROWS(embeds_in_c4(4));
  CHECK_THROWS(embeds_in_c4(0));
  for (long a = -50; a <= 50; ++a) {
    if (a == 0 || is_square(Rational(a))) continue;
    CHECK(embeds_in_c4(a) == oracle::sum_of_two_squares_search(a));
  }
}

TEST_CASE("D4 embedding") {
  CHECK(embeds_in_d4(2, 7));
  CHECK_FALSE(embeds_in_d4(2, 3));
  CHECK(embeds_in_d4(5, -1));
  // a b a square: the field is not biquadratic
  CHECK_THROWS_AS(embeds_in_d4(-1, -1), std::invalid_argument);
  CHECK_THROWS_AS(embeds_in_d4(2, 8), std::invalid_argument);
  CHECK_THROWS_AS(embeds_in_d4(4, 3), std::invalid_argument);
  // (a, b) = 1 everywhere is the D4 condition; compare with the oracle symbols
  for (long a : {2L, 3L, 5L, -1L, -2L, 6L})
    for (long b : {7L, -1L, 3L, 5L, 10L, -3L}) {
      if (is_square(Rational(a * b)) || a == b) continue;
      bool all = oracle::hilbert_real(a, b) == 1;
      for (long p : kPrimes) all = all && oracle::hilbert_by_search(a, b, p) == 1;
      CHECK_MESSAGE(embeds_in_d4(a, b) == all, a, " ", b);
    }
}

TEST_CASE("Witt invariants of rational forms") {
  const auto w = witt_invariants(DiagonalForm<Rational>{{1, 1}});
  CHECK(w.dimension_mod2 == 0);
  CHECK(w.discriminant == 1);
  CHECK(witt_invariants(DiagonalForm<Rational>{{2, make_rational(3, 4), 5}}).discriminant == 30);
  const auto h = witt_invariants(DiagonalForm<Rational>{{-1, -1}});
  CHECK(h.hasse_nonsplit.size() == 2);
}

TEST_CASE("Witt tables match isometry enumeration") {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const auto t = witt_table_finite_field(q);
    const auto o = oracle::witt_by_isometry(q);
    CHECK_MESSAGE(t.size == o.size, "q=", q);
    CHECK_MESSAGE(t.exponent == o.exponent, "q=", q);
    CHECK(t.size == 4);
    CHECK(t.exponent == (q % 4 == 3 ? 4u : 2u));
    CHECK(t.ternary_isotropic);
  }
  CHECK_THROWS(witt_table_finite_field(8));
  CHECK(witt_table_finite_field(9973).size == 4);
}
