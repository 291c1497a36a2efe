#pragma once

// Odd-characteristic finite fields F_{p^e}.
//
// Elements are packed as base-p digit strings: value = sum c_i p^i encodes
// the residue sum c_i x^i modulo the field's defining polynomial, which is
// the lexicographically smallest monic primitive polynomial of degree e.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quadtower/rational.hpp"

namespace quadtower {

/// Base fields handed to users and oracles stay at or below this order.
inline constexpr std::uint64_t kMaxBaseFieldOrder = 10000;
/// Extension fields built internally by the tower harness.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 40;

class FiniteField;
using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  static FiniteFieldPtr make(std::uint64_t p, unsigned e);
  /// Accepts an odd prime power q <= kMaxBaseFieldOrder.
  static FiniteFieldPtr of_order(std::uint64_t q);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  /// Defining polynomial, low degree first, monic.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t n) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// Encoding of the generator x of the polynomial basis (a primitive element).
  std::uint64_t generator() const;
  std::uint64_t from_integer(std::int64_t n) const;

  /// "2+x^2" style text; "0" for zero.
  std::string format(std::uint64_t a) const;
  std::string to_string() const { return "F" + std::to_string(q_); }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  FiniteField(std::uint64_t p, unsigned e);
  std::vector<std::uint64_t> digits(std::uint64_t a) const;
  std::uint64_t pack(const std::vector<std::uint64_t>& c) const;

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

class FiniteFieldElement {
 public:
  FiniteFieldElement(FiniteFieldPtr field, std::uint64_t value);
  static FiniteFieldElement from_integer(FiniteFieldPtr field, std::int64_t n);

  const FiniteFieldPtr& field() const { return field_; }
  std::uint64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FiniteFieldElement operator-() const;
  friend FiniteFieldElement operator+(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator-(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator*(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator/(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend bool operator==(const FiniteFieldElement& a, const FiniteFieldElement& b) {
    return a.value_ == b.value_ && *a.field_ == *b.field_;
  }

  FiniteFieldElement pow(std::uint64_t n) const;
  FiniteFieldElement inverse() const;
  /// x -> x^p.
  FiniteFieldElement frobenius() const { return pow(field_->characteristic()); }

  std::string to_string() const { return field_->format(value_) + "@" + field_->to_string(); }

 private:
  FiniteFieldPtr field_;
  std::uint64_t value_;
};

bool is_square(const FiniteFieldElement& x);
/// Root that is itself a square when exactly one root is; otherwise the root
/// with the smaller encoding.
std::optional<FiniteFieldElement> sqrt_exact(const FiniteFieldElement& x);
bool is_fourth_power(const FiniteFieldElement& x);

/// X^(2^n) - a irreducible: [a] != [1] and, for n >= 2, a not in -4 F*^4.
bool power2_irreducible(const Rational& a, unsigned n);
bool power2_irreducible(const FiniteFieldElement& a, unsigned n);

}  // namespace quadtower
