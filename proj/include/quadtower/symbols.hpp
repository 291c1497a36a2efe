#pragma once

// Hilbert symbols over Q, the C4 and D4 embedding predicates they decide,
// and Witt-ring tables of small finite fields.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadtower/exactfield.hpp"

namespace quadtower {

class Place {
 public:
  static Place real() { return Place(); }
  /// Throws std::invalid_argument unless p is prime.
  static Place prime(const Integer& p);

  bool is_real() const { return p_ == 0; }
  const Integer& p() const { return p_; }

  /// "real" or the prime in decimal.
  std::string to_string() const { return is_real() ? "real" : p_.get_str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }

 private:
  Place() = default;
  Integer p_ = 0;
};

/// Accepts "real", "inf" or a prime.
Place parse_place(std::string_view text);

/// (a,b)_v in {+1, -1}. Throws on a zero argument.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Real, 2, and the odd primes dividing a or b: every place where (a,b)_v can be -1.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

struct PlaceSymbol {
  Place place;
  int symbol;
};

struct ProductCheck {
  std::vector<PlaceSymbol> places;       // all relevant places
  std::vector<Place> nonsplit;           // places with symbol -1
  bool even() const { return nonsplit.size() % 2 == 0; }
};

ProductCheck global_product_check(const Rational& a, const Rational& b);

/// Q(sqrt a)/Q lies in a cyclic quartic extension. Rejects zero and squares.
bool embeds_in_c4(const Rational& a);

/// Q(sqrt a, sqrt b) lies in a D4 extension whose cyclic subgroup of order 4
/// fixes Q(sqrt ab). Rejects degenerate biquadratics.
bool embeds_in_d4(const Rational& a, const Rational& b);

// -- quadratic forms --

template <class T>
struct DiagonalForm {
  std::vector<T> entries;
  std::size_t dimension() const { return entries.size(); }
};

/// Dimension parity, discriminant class and the places where the Hasse
/// invariant prod_{i<j} (a_i, a_j)_v is -1.
struct WittInvariants {
  unsigned dimension_mod2;
  Integer discriminant;  // squarefree representative
  std::vector<Place> hasse_nonsplit;
};

WittInvariants witt_invariants(const DiagonalForm<Rational>& form);

struct WittClass {
  DiagonalForm<FiniteFieldElement> anisotropic;
  unsigned order;  // additive order in W(F_q)
  std::string to_string() const;
};

struct WittTable {
  std::uint64_t q;
  std::size_t size;
  unsigned exponent;
  std::vector<WittClass> classes;
  /// Every ternary diagonal form is isotropic, so the anisotropic forms of
  /// dimension <= 2 exhaust the Witt classes.
  bool ternary_isotropic;
};

/// Classifies diagonal forms of dimension <= 2 over F_q by representation
/// counts and derives size and additive exponent of the Witt ring.
WittTable witt_table_finite_field(std::uint64_t q);

}  // namespace quadtower
