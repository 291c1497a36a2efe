#pragma once

// Square classes of rational function fields k(t), k a number field of
// degree <= 2 (Q, Q(i) or Q(sqrt m)). k[t] is a UFD, so the class of a
// rational function is read off its irreducible factorization: the odd
// exponents plus the class of the leading constant.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadtower/multiquad.hpp"
#include "quadtower/sqclass.hpp"

namespace quadtower {

/// Polynomial in t over a multiquadratic constant field.
class KPoly {
 public:
  explicit KPoly(MultiquadFieldPtr k);
  KPoly(MultiquadFieldPtr k, std::vector<MultiquadElement> coeffs);

  static KPoly constant(const MultiquadElement& c);
  static KPoly constant(MultiquadFieldPtr k, const Rational& c);
  static KPoly variable(MultiquadFieldPtr k);
  /// t - root
  static KPoly linear(const MultiquadElement& root);

  const MultiquadFieldPtr& field() const { return k_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<MultiquadElement>& coeffs() const { return coeffs_; }
  MultiquadElement coeff(int i) const;
  const MultiquadElement& leading() const;

  KPoly operator-() const;
  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const MultiquadElement& c);
  friend bool operator==(const KPoly& a, const KPoly& b);

  KPoly pow(unsigned n) const;
  MultiquadElement eval(const MultiquadElement& x) const;
  /// this(g(t))
  KPoly compose(const KPoly& g) const;
  KPoly monic() const;
  /// Coefficientwise sign-pattern automorphism of k.
  KPoly conjugate(unsigned mask) const;

  /// Canonical text, e.g. "t^2+2*t+2", "t-i", "t+(1-i)".
  std::string to_string() const;

 private:
  void trim();
  MultiquadFieldPtr k_;
  std::vector<MultiquadElement> coeffs_;  // low degree first, no trailing zeros
};

/// Quotient and remainder; throws on a zero divisor.
std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);

/// Parses expressions in t over k: "t^2+2*t+2", "(t-i)^2*(t+2*i)",
/// "t^2-sqrt(2)". Constants may use "i" (sqrt -1) or "sqrt(m)" when that
/// generator belongs to k.
KPoly parse_kpoly(std::string_view text, MultiquadFieldPtr k);

/// Distinct roots of f in its constant field (rank <= 1).
std::vector<MultiquadElement> roots_in_field(const KPoly& f);

struct IrreducibleFactor {
  KPoly poly;  // monic irreducible over k
  int exponent;
};

/// constant * prod poly_j^exponent_j with pairwise distinct monic irreducibles.
class FactoredRatFunc {
 public:
  FactoredRatFunc(MultiquadElement constant, std::vector<IrreducibleFactor> factors);
  static FactoredRatFunc unit(MultiquadFieldPtr k);

  const MultiquadElement& constant() const { return constant_; }
  const std::vector<IrreducibleFactor>& factors() const { return factors_; }
  /// Exponent of a monic irreducible, 0 if absent.
  int exponent_of(const KPoly& p) const;

  friend FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b);
  FactoredRatFunc pow(int n) const;
  FactoredRatFunc conjugate(unsigned mask) const;
  /// The underlying polynomial; requires all exponents positive.
  KPoly expand() const;

  std::string to_string() const;

 private:
  void normalize();
  MultiquadElement constant_;
  std::vector<IrreducibleFactor> factors_;
};

inline constexpr int kMaxFactorDegree = 4;

/// Complete factorization over k of a polynomial of degree <= 4.
FactoredRatFunc factor(const KPoly& f);

/// "irr:<monic poly>" for an irreducible factor.
std::string irreducible_label(const KPoly& monic_irreducible);
/// "const:<class>" for a nonsquare constant; nullopt for a square.
std::optional<std::string> constant_class_label(const MultiquadElement& c);

SquareClassVector square_class_of(const FactoredRatFunc& f);

// -- Disjointness of the sampled square-class spans over Q(i)(t). --

MultiquadFieldPtr gaussian_rationals();

struct QuadraticParams {
  Rational b;
  Rational c;
};

struct SpanGenerator {
  std::string name;  // polynomial text over Q
  FactoredRatFunc factored;
  SquareClassVector square_class;
};

struct DisjointnessResult {
  bool trivial = true;
  std::optional<SquareClassVector> witness;
  SquareClassSpace w_space;
  SquareClassSpace v_space;
  std::vector<SpanGenerator> w_generators;
  std::vector<SpanGenerator> v_generators;
};

/// W = span{[t-i], [t+2i]}, V = span of [t+r] and [t^2+bt+c] (b^2 - 4c < 0),
/// all over Q(i)(t). Throws std::invalid_argument on a sample with b^2-4c >= 0.
DisjointnessResult check_sampled_disjointness(const std::vector<Rational>& linear_r,
                                              const std::vector<QuadraticParams>& quadratic_bc);

/// Why a query class fails to lie in V: for every V-generator carrying one of
/// the query's labels, the labels it drags along with odd exponent.
struct ParityTrace {
  SquareClassVector query;
  SquareClassVector residual;
  bool member = false;
  struct Entry {
    std::string generator;
    std::string shared_label;
    std::vector<std::string> partner_labels;  // odd in the generator
    std::vector<int> partner_exponents_in_query;
  };
  std::vector<Entry> entries;
};

ParityTrace parity_trace(const DisjointnessResult& spans, const FactoredRatFunc& query);

}  // namespace quadtower
