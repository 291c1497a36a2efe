#pragma once

// Finite 2-groups materialized as Cayley tables, and the descending series
// G(1) = G, G(n+1) = G(n)^2 [G(n), G].

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quadtower {

/// Images of the points 0..n-1; products compose left to right: (p*q)(x) = q(p(x)).
using Permutation = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxPermutationDegree = 64;
inline constexpr std::size_t kMaxGroupOrder = 1024;

using Element = std::uint16_t;

class FiniteTwoGroup {
 public:
  /// Closure of the generators. Throws when the order is not a power of 2 or
  /// exceeds kMaxGroupOrder.
  static FiniteTwoGroup from_permutations(const std::vector<Permutation>& generators,
                                          std::string name = "");
  /// Group given by a multiplication table with identity 0.
  static FiniteTwoGroup from_table(std::vector<std::vector<Element>> table,
                                   std::vector<Element> generators, std::string name = "");

  std::size_t order() const { return table_.size(); }
  const std::string& name() const { return name_; }
  static constexpr Element identity() { return 0; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element commutator(Element a, Element b) const;  // a^-1 b^-1 a b
  unsigned element_order(Element a) const;
  /// Generating elements (images of the defining permutations).
  const std::vector<Element>& generators() const { return generators_; }
  /// Defining permutation of each element; empty for table-defined groups.
  const std::vector<Permutation>& permutations() const { return perms_; }

 private:
  FiniteTwoGroup() = default;
  void finish();
  std::string name_;
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<Permutation> perms_;
};

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, const std::vector<Element>& members);

  std::size_t order() const { return members_.size(); }
  bool contains(Element x) const { return mask_[x]; }
  const std::vector<Element>& members() const { return members_; }
  bool is_subset_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<bool> mask_;
  std::vector<Element> members_;  // ascending
};

Subgroup whole_group(const FiniteTwoGroup& g);
Subgroup trivial_subgroup(const FiniteTwoGroup& g);
Subgroup generated_subgroup(const FiniteTwoGroup& g, const std::vector<Element>& seeds);
bool is_normal(const FiniteTwoGroup& g, const Subgroup& h);
/// [A, B], generated by all a^-1 b^-1 a b.
Subgroup commutator_subgroup(const FiniteTwoGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup center(const FiniteTwoGroup& g);

/// H^2 [H, G]. Throws std::invalid_argument if H is not normal.
Subgroup series_step(const Subgroup& h, const FiniteTwoGroup& g);

/// G / N with cosets numbered by their smallest element. Throws if N is not normal.
FiniteTwoGroup quotient_group(const FiniteTwoGroup& g, const Subgroup& n);

unsigned exponent(const FiniteTwoGroup& g);
std::vector<Subgroup> lower_central_series(const FiniteTwoGroup& g);
/// Number of steps of the lower central series down to 1 (0 for the trivial group).
unsigned nilpotency_class(const FiniteTwoGroup& g);
bool is_abelian(const FiniteTwoGroup& g);
/// Invariant factors of G/[G,G] as powers of 2, ascending.
std::vector<unsigned> abelian_invariants(const FiniteTwoGroup& g);

struct Fingerprint {
  std::size_t order;
  unsigned exponent;
  unsigned nilpotency_class;
  std::vector<unsigned> abelian_invariants;
  std::size_t involutions;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  /// "order 8, exponent 4, class 2, abelianization [2, 2], 5 involutions"
  std::string to_string() const;
};

Fingerprint fingerprint(const FiniteTwoGroup& g);

struct SeriesLevel {
  unsigned n;
  std::size_t subgroup_order;    // |G(n)|
  std::size_t quotient_order;    // |G/G(n)|
  unsigned quotient_exponent;
  unsigned quotient_class;
};

struct SeriesReport {
  std::vector<Subgroup> chain;  // G(1), G(2), ... up to the first stable term
  std::vector<SeriesLevel> levels;
  /// G(n) for any n >= 1; constant past the stable term.
  const Subgroup& level(unsigned n) const;
  std::string to_string() const;
};

SeriesReport tower_series(const FiniteTwoGroup& g);

struct StructuralCheck {
  std::string name;  // "derived-in-fourth", "central", "exponent", "class"
  unsigned n;
  bool pass;
  std::string detail;
};

struct StructuralReport {
  std::vector<StructuralCheck> checks;
  bool all_pass() const;
};

/// (i) [G(2),G(2)] in G(4); for each n up to max(stable index, 5):
/// (ii) [G(n),G] in G(n+1); (iii) exp(G/G(n)) | 2^(n-1); (iv) class(G/G(n)) <= n-1.
StructuralReport structural_checks(const FiniteTwoGroup& g);

// -- catalog and text forms --

/// C2, C2^2, C2^3, Z2, Z4, Z8, Z16, D4, Q8, SD16, M4(2), D4xZ2, Q8xZ2, Z4xZ4, trivial.
std::vector<std::string> catalog_names();
FiniteTwoGroup catalog_group(std::string_view name);

/// Cycle notation with 1-based points, generators separated by commas
/// outside parentheses: "(1 2 3 4),(1 3)" or "(1,2,4,7)(3,6,8,5),(1,3,4,8)(2,5,7,6)".
std::vector<Permutation> parse_generators(std::string_view text);
/// A catalog name or a generator list.
FiniteTwoGroup parse_group(std::string_view text);

std::string permutation_to_string(const Permutation& p);

}  // namespace quadtower
