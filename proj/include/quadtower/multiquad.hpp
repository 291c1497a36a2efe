#pragma once

// Exact arithmetic in Q(sqrt a_1, ..., sqrt a_d), d <= 3.
//
// An element is a coordinate vector over the basis prod_{i in S} sqrt a_i,
// indexed by the bitmask S. The Galois group is (Z/2)^d; the automorphism with
// mask m flips the sign of sqrt a_i for every bit i set in m.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadtower/rational.hpp"

namespace quadtower {

inline constexpr std::size_t kMaxMultiquadRank = 3;

class MultiquadField;
using MultiquadFieldPtr = std::shared_ptr<const MultiquadField>;

class MultiquadField {
 public:
  /// Generators must be squarefree integers with independent square classes.
  static MultiquadFieldPtr make(std::vector<Integer> generators);
  static MultiquadFieldPtr rationals();

  std::size_t rank() const { return gens_.size(); }
  std::size_t degree() const { return std::size_t{1} << gens_.size(); }
  const std::vector<Integer>& generators() const { return gens_; }
  const Integer& generator(std::size_t i) const { return gens_.at(i); }

  /// "Q" or "Q(sqrt 2, sqrt -1)".
  std::string to_string() const;

  friend bool operator==(const MultiquadField& a, const MultiquadField& b) {
    return a.gens_ == b.gens_;
  }

 private:
  explicit MultiquadField(std::vector<Integer> g) : gens_(std::move(g)) {}
  std::vector<Integer> gens_;
};

MultiquadFieldPtr parse_multiquad_field(std::string_view text);

class MultiquadElement {
 public:
  MultiquadElement(MultiquadFieldPtr field, std::vector<Rational> coords);

  static MultiquadElement from_rational(MultiquadFieldPtr field, const Rational& r);
  /// sqrt of the i-th generator.
  static MultiquadElement root(MultiquadFieldPtr field, std::size_t i);
  /// Basis element prod_{i in mask} sqrt a_i.
  static MultiquadElement basis(MultiquadFieldPtr field, unsigned mask);

  const MultiquadFieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(unsigned mask) const { return coords_.at(mask); }

  bool is_zero() const;
  bool is_rational() const;
  /// True when some basis element with sqrt of `generator` has a nonzero coordinate.
  bool involves(std::size_t generator) const;

  MultiquadElement operator-() const;
  MultiquadElement& operator+=(const MultiquadElement& o);
  MultiquadElement& operator-=(const MultiquadElement& o);
  MultiquadElement& operator*=(const MultiquadElement& o);
  MultiquadElement& operator/=(const MultiquadElement& o);
  MultiquadElement& operator*=(const Rational& r);

  friend MultiquadElement operator+(MultiquadElement a, const MultiquadElement& b) { return a += b; }
  friend MultiquadElement operator-(MultiquadElement a, const MultiquadElement& b) { return a -= b; }
  friend MultiquadElement operator*(MultiquadElement a, const MultiquadElement& b) { return a *= b; }
  friend MultiquadElement operator/(MultiquadElement a, const MultiquadElement& b) { return a /= b; }
  friend MultiquadElement operator*(MultiquadElement a, const Rational& r) { return a *= r; }
  friend MultiquadElement operator*(const Rational& r, MultiquadElement a) { return a *= r; }

  friend bool operator==(const MultiquadElement& a, const MultiquadElement& b);

  MultiquadElement inverse() const;
  /// Image under the sign-pattern automorphism `mask`.
  MultiquadElement conjugate(unsigned mask) const;

  /// "[1, 1]@Q(sqrt 2)" for 1 + sqrt 2.
  std::string to_string() const;

 private:
  void check_same_field(const MultiquadElement& o) const;
  MultiquadFieldPtr field_;
  std::vector<Rational> coords_;
};

MultiquadElement parse_multiquad_element(std::string_view text);

bool is_square(const MultiquadElement& x);
/// y with y^2 = x, canonicalized so the first nonzero coordinate is positive.
std::optional<MultiquadElement> sqrt_exact(const MultiquadElement& x);

/// Images under all 2^d sign patterns, indexed by pattern mask.
std::vector<MultiquadElement> galois_orbit(const MultiquadElement& x);

/// x * sigma_i(x), which lies in the subfield without sqrt a_i.
MultiquadElement norm_to_subfield(const MultiquadElement& x, std::size_t i);

/// Product of all conjugates; a rational.
Rational absolute_norm(const MultiquadElement& x);

}  // namespace quadtower
