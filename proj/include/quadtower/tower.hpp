#pragma once

// Finite fragments of the tower F = F(1) in F(2) in F(3) ..., with the
// Galois-criterion, closure, fixed-class and embedding constructions that
// the verification harness runs on them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadtower/exactfield.hpp"
#include "quadtower/kummer.hpp"
#include "quadtower/sqclass.hpp"
#include "quadtower/twogroup.hpp"

namespace quadtower {

enum class BaseKind { rationals, finite_field, function_field };

/// A base field together with finitely many of its square classes, whose
/// roots span the level-2 field K. Descriptors: "Q{2,-1}", "Q{}", "F3",
/// "F9", "Q(i)(t)".
class TowerFragment {
 public:
  static TowerFragment rational(const std::vector<Integer>& generators);
  static TowerFragment finite(std::uint64_t q);
  static TowerFragment function_field();

  BaseKind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }
  /// Level-2 multiquadratic field (rational fragments).
  const MultiquadFieldPtr& level2() const;
  /// F_q and F_(q^2) (finite fragments).
  const FiniteFieldPtr& base_finite() const;
  const FiniteFieldPtr& level2_finite() const;
  /// Order of the (Z/2)^d action on K.
  std::size_t action_order() const;

 private:
  TowerFragment() = default;
  BaseKind kind_ = BaseKind::rationals;
  std::string descriptor_;
  MultiquadFieldPtr level2_;
  FiniteFieldPtr base_ff_, level2_ff_;
};

TowerFragment parse_fragment(std::string_view text);

/// The quadratic subfield Q(sqrt prod_{i in mask} a_i) of a rational fragment,
/// or the unique quadratic extension of a finite base.
struct QuadraticSubfield {
  unsigned mask = 1;
  /// Sign patterns of K fixing the subfield.
  std::vector<unsigned> fixing_masks(const TowerFragment& f) const;
  std::string to_string(const TowerFragment& f) const;
};

/// Subfield Q(sqrt a) for a generator value a of the fragment.
QuadraticSubfield subfield_of(const TowerFragment& f, const Integer& a);

/// K(sqrt a)/F Galois: sigma(a)/a is a square in K for every sigma.
/// Throws std::invalid_argument for zero or square a.
bool is_quadratic_ext_galois(const TowerFragment& f, const MultiquadElement& a);
bool is_quadratic_ext_galois(const TowerFragment& f, const FiniteFieldElement& a);
/// Same criterion restricted to the automorphisms fixing L.
bool is_quadratic_ext_galois_over(const TowerFragment& f, const QuadraticSubfield& l,
                                  const MultiquadElement& a);

struct GaloisWitness {
  std::string defining;                  // the element whose root is adjoined
  std::vector<std::string> radicands;    // closure = K(sqrt of these)
  std::size_t input_degree;              // [K(sqrt k) : F]
  std::size_t degree;                    // [closure : F]
  bool input_galois;
  bool closure_stable;                   // every automorphism maps the root set into the closure
  Fingerprint group;
};

/// Galois closure of K(sqrt k) over F, where K(sqrt k)/L is Galois.
GaloisWitness galois_closure_quadratic(const TowerFragment& f, const QuadraticSubfield& l,
                                       const MultiquadElement& k);

/// Fixed classes among a candidate pool of level-2 elements.
struct J1Result {
  std::vector<std::string> pool;             // candidate texts, in input order
  std::vector<MultiquadElement> pool_basis;  // independent classes chosen from the pool
  SquareClassSpace fixed;                    // over labels "alg:<basis element>"
  std::vector<std::string> fixed_representatives;
  std::vector<std::string> rejected;         // pool members outside the fixed space
};

J1Result j1_fixed_classes(const TowerFragment& f, const std::vector<MultiquadElement>& pool);

/// Base classes {-1, 2, 3, 5, generators}, the roots sqrt a_i, the samples and
/// their norms to Q.
std::vector<MultiquadElement> default_candidate_pool(const TowerFragment& f,
                                                     const std::vector<MultiquadElement>& samples);

/// One level of the finite-field tower over F_q: F(n) = F_(q^(2^(n-1))).
struct FiniteLevel {
  unsigned n;
  std::uint64_t field_order;
  std::size_t class_group_dimension;  // dim F(n)*/F(n)*^2 = 1
  SquareClassSpace fixed;             // over the label "gen:<field>", fixed under Gal(F(n)/F)
  Fingerprint group;                  // Gal(F(n)/F) from Frobenius on conjugates
};

FiniteLevel finite_level(std::uint64_t q, unsigned n);
std::vector<FiniteLevel> finite_tower_levels(std::uint64_t q, unsigned max_level);

/// Fixed level-2 classes: the whole class group for finite fragments, the
/// default candidate pool for rational ones. Throws for Q(i)(t).
SquareClassSpace j1_fixed_classes(const TowerFragment& f);

struct ConicPoint {
  Integer alpha, beta, gamma;  // gamma^2 = a alpha^2 + b beta^2
};

/// Smallest-height integer point with alpha != 0, |coordinates| <= bound.
std::optional<ConicPoint> find_conic_point(const Integer& a, const Integer& b, unsigned bound = 100);

struct D4Witness {
  Integer a, b;  // squarefree representatives
  ConicPoint point;
  std::string delta;
  GaloisWitness closure;
  bool contains_sqrt_b;
  bool cyclic_over_ab;  // automorphisms fixing sqrt(ab) form a cyclic group of order 4
};

/// nullopt when the bounded conic search finds nothing. Throws when
/// embeds_in_d4(a, b) fails.
std::optional<D4Witness> construct_d4_witness(const Rational& a, const Rational& b);

/// X^n - a (integer a) is Eisenstein at p.
bool eisenstein_binomial(const Integer& a, unsigned n, const Integer& p);

// -- the case split for the exponent statements --

enum class FieldCase { quadratically_closed, euclidean, neither };

/// A square oracle over rational probes: what each model field says about
/// "is x a square".
struct SymbolicField {
  std::string name;
  bool (*is_square)(const Rational&);
};

SymbolicField quadratically_closed_tag();
SymbolicField euclidean_tag();
SymbolicField rational_field_model();

/// Classifies by probing squares of small rationals and sums of two squares.
FieldCase classify_field(const SymbolicField& f);
std::string to_string(FieldCase c);

}  // namespace quadtower
