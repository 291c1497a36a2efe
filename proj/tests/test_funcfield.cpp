#include <doctest.h>

#include <random>

#include "quadtower/funcfield.hpp"

using namespace quadtower;

namespace {

MultiquadFieldPtr qi() { return gaussian_rationals(); }
MultiquadFieldPtr rationals() { return MultiquadField::make({}); }

KPoly poly(const std::string& s, const MultiquadFieldPtr& k = gaussian_rationals()) { return parse_kpoly(s, k); }

std::vector<std::string> factor_texts(const FactoredRatFunc& f) {
  std::vector<std::string> out;
  for (const auto& p : f.factors()) out.push_back(p.poly.to_string() + "^" + std::to_string(p.exponent));
  std::sort(out.begin(), out.end());
  return out;
}

SquareClassVector cls(std::initializer_list<std::string> labels) { return SquareClassVector(labels); }

}  // namespace

TEST_CASE("factorization examples") {
  CHECK(factor_texts(factor(poly("t^2+1"))) == std::vector<std::string>{"t+i^1", "t-i^1"});
  CHECK(factor_texts(factor(poly("t^2+1", rationals()))) == std::vector<std::string>{"t^2+1^1"});
  CHECK(factor_texts(factor(poly("(t-i)^2*(t+2*i)"))) == std::vector<std::string>{"t+2*i^1", "t-i^2"});
  CHECK(factor_texts(factor(poly("t^4+4", rationals()))) ==
        std::vector<std::string>{"t^2+2*t+2^1", "t^2-2*t+2^1"});
  CHECK(factor(poly("t^4+1", MultiquadField::make({2}))).factors().size() == 2);
  CHECK(factor(poly("t^4+1", rationals())).factors().size() == 1);
  CHECK_THROWS_AS(factor(poly("t^5+1", rationals())), std::invalid_argument);
  CHECK_THROWS_AS(factor(KPoly(qi())), std::invalid_argument);
}

TEST_CASE("square classes of factored functions") {
  CHECK(square_class_of(factor(poly("(t-i)^2*(t+2*i)"))) == cls({"irr:t+2*i"}));
  CHECK(square_class_of(factor(poly("(t+2*i)*(t-i)*(t^2+1)"))) == cls({"irr:t+2*i", "irr:t+i"}));
  CHECK(square_class_of(factor(poly("4*(t-1)^3", rationals()))) == cls({"irr:t-1"}));
  CHECK(square_class_of(factor(poly("3*(t-1)^2", rationals()))) == cls({"const:3"}));
}

TEST_CASE("factor reproduces the input and classes are additive") {
  std::mt19937 rng(99);
  const auto k = qi();
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_factor = [&]() {
    const MultiquadElement a(k, {Rational(coef(rng)), Rational(coef(rng))});
    if (rng() % 2) return KPoly::linear(a);
    const MultiquadElement b(k, {Rational(coef(rng)), Rational(coef(rng))});
    return KPoly::variable(k) * KPoly::variable(k) + KPoly::variable(k) * a + KPoly::constant(b);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const KPoly f = random_factor(), g = random_factor();
    const auto ff = factor(f), fg = factor(g), ffg = factor(f * g);
    CHECK(ff.expand() == f);
    CHECK(ffg.expand() == (f * g));
    CHECK(square_class_of(ffg) == square_class_of(ff) + square_class_of(fg));
    CHECK(square_class_of(factor(f * f)).is_identity());
    for (const auto& p : ffg.factors()) CHECK(p.poly == p.poly.monic());
  }
}

TEST_CASE("real-parameter generators are conjugation symmetric") {
  const auto k = qi();
  for (int r = -3; r <= 3; ++r) {
    const auto f = factor(KPoly::linear(MultiquadElement::from_rational(k, -r)));
    CHECK(square_class_of(f) == square_class_of(f.conjugate(1)));
  }
  for (auto [b, c] : {std::pair{0, 1}, {2, 2}, {-2, 5}, {1, 1}, {0, 4}}) {
    const KPoly t = KPoly::variable(k);
    const auto f = factor(t * t + KPoly::constant(k, b) * t + KPoly::constant(k, c));
    const auto v = square_class_of(f);
    SquareClassVector mirrored;
    for (const auto& p : f.factors())
      if (p.exponent % 2) mirrored.toggle(irreducible_label(p.poly.conjugate(1)));
    CHECK(v == mirrored);
  }
}

TEST_CASE("sampled disjointness") {
  const auto res = check_sampled_disjointness({0, 1, -2}, {{0, 1}, {2, 2}, {-2, 5}});
  CHECK(res.trivial);
  CHECK(res.w_space.dimension() == 2);
  CHECK(check_sampled_disjointness({}, {}).trivial);
  CHECK_THROWS_AS(check_sampled_disjointness({}, {{0, -1}}), std::invalid_argument);
  // membership of [t - i] in V fails by the parity of t + i
  const auto trace = parity_trace(res, factor(poly("t-i")));
  CHECK_FALSE(trace.member);
  bool found = false;
  for (const auto& e : trace.entries)
    for (std::size_t j = 0; j < e.partner_labels.size(); ++j)
      if (e.partner_labels[j] == "irr:t+i" && e.partner_exponents_in_query[j] == 0) found = true;
  CHECK(found);
}

TEST_CASE("growing grids keep V growing and the spans disjoint") {
  std::vector<Rational> r;
  std::vector<QuadraticParams> bc;
  std::size_t last_dim = 0;
  for (int n = 0; n < 10; ++n) {
    r.emplace_back(n - 4);
    bc.push_back({Rational(n % 3), Rational(n + 1)});
    const auto res = check_sampled_disjointness(r, bc);
    CHECK(res.trivial);
    CHECK(res.v_space.dimension() >= last_dim);
    last_dim = res.v_space.dimension();
  }
}
