#pragma once

// Explicit 2-extensions of Q used as Galois-group oracles.
//
// KummerExtension: E = K(sqrt k_1, ..., sqrt k_r) over a multiquadratic K,
// elements as coordinates over the products of the sqrt k_j. When E/Q is
// Galois its automorphisms are enumerated directly and turned into
// permutations of the conjugates of the generating roots.
//
// PowerBasisField: Q[x]/(P) for the real subfields of 2-power cyclotomic
// fields, with automorphisms x -> C_j(x).

#include <optional>
#include <string>
#include <vector>

#include "quadtower/multiquad.hpp"
#include "quadtower/twogroup.hpp"

namespace quadtower {

class KummerExtension {
 public:
  /// coords[T] multiplies prod_{j in T} sqrt k_j.
  struct Element {
    std::vector<MultiquadElement> coords;
    friend bool operator==(const Element&, const Element&) = default;
  };
  struct Automorphism {
    unsigned base_mask;                // action on K
    std::vector<Element> root_images;  // images of sqrt k_j
  };
  struct GaloisAction {
    std::vector<Element> domain;  // conjugates of the sqrt a_i and sqrt k_j
    std::vector<Automorphism> automorphisms;
    std::vector<Permutation> permutations;
    FiniteTwoGroup group;
  };

  /// Radicands must be nonzero and independent in K*/K*^2 (at most 3 of them).
  KummerExtension(MultiquadFieldPtr base, std::vector<MultiquadElement> radicands);

  const MultiquadFieldPtr& base() const { return base_; }
  const std::vector<MultiquadElement>& radicands() const { return radicands_; }
  /// [E : Q]
  std::size_t degree() const { return base_->degree() << radicands_.size(); }

  Element embed(const MultiquadElement& x) const;
  Element root(std::size_t j) const;
  Element mul(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& r) const;
  std::string format(const Element& a) const;

  /// All automorphisms of E over Q, or nullopt when E/Q is not Galois (some
  /// tau(k_j) leaves the span of the radicands modulo K*^2).
  std::optional<std::vector<Automorphism>> automorphisms() const;
  Element apply(const Automorphism& s, const Element& x) const;

  /// Permutation representation of Gal(E/Q); nullopt when not Galois.
  std::optional<GaloisAction> galois_action() const;

 private:
  MultiquadFieldPtr base_;
  std::vector<MultiquadElement> radicands_;
};

/// C_0 = 2, C_1 = x, C_n = x C_(n-1) - C_(n-2); C_n(z + 1/z) = z^n + z^-n.
std::vector<Integer> chebyshev_c(unsigned n);

/// Minimal polynomial of zeta_32 + zeta_32^-1, low degree first.
inline const std::vector<int> kZeta32PlusMinPoly{2, 0, -16, 0, 20, 0, -8, 0, 1};

class PowerBasisField {
 public:
  /// Monic P, low degree first, assumed irreducible.
  explicit PowerBasisField(std::vector<Rational> modulus);

  using Element = std::vector<Rational>;  // size deg P
  std::size_t degree() const { return modulus_.size() - 1; }
  const std::vector<Rational>& modulus() const { return modulus_; }
  Element generator() const;
  Element constant(const Rational& r) const;
  Element mul(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  /// f(a) for an integer polynomial f.
  Element evaluate(const std::vector<Integer>& f, const Element& a) const;

 private:
  Element reduce(std::vector<Rational> a) const;
  std::vector<Rational> modulus_;
};

/// Q(zeta_(2^k))^+ for k >= 3 as the splitting field of the minimal
/// polynomial of zeta + zeta^-1, with its Galois group computed from the
/// action of x -> C_j(x) on the roots C_m(x).
struct RealCyclotomicWitness {
  unsigned k;
  std::vector<Rational> minimal_polynomial;
  std::size_t degree;
  bool roots_verified;  // every C_m(x), m odd, is a root
  Fingerprint group;
  bool cyclic;
  bool contains_sqrt2;             // (x^4 - 4x^2 + 2)^2 = 2 for k >= 4; x^2 = 2 for k = 3
  std::size_t sqrt2_stabilizer;    // order of the subgroup fixing sqrt 2
};

/// Uses kZeta32PlusMinPoly for k = 5 and the recursion otherwise.
RealCyclotomicWitness real_cyclotomic_witness(unsigned k);

}  // namespace quadtower
