#pragma once

// F2 linear algebra over labeled square-class generators.
//
// A square class is stored as the set of generator labels it involves, so
// the sum of two classes is the symmetric difference of their supports. The
// labels are opaque to this module; number fields, finite fields and
// function fields each produce their own canonical label strings.

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace quadtower {

class SquareClassVector {
 public:
  SquareClassVector() = default;
  SquareClassVector(std::initializer_list<std::string> labels);
  explicit SquareClassVector(std::vector<std::string> labels);

  /// Toggles one label (multiplies the class by that generator).
  void toggle(const std::string& label);
  bool contains(const std::string& label) const;
  bool is_identity() const { return support_.empty(); }
  std::size_t weight() const { return support_.size(); }

  /// Sorted, duplicate-free label list. Empty means the class [1].
  const std::vector<std::string>& support() const { return support_; }
  /// Smallest label in the canonical order; only valid when non-identity.
  const std::string& pivot() const { return support_.front(); }

  SquareClassVector& operator+=(const SquareClassVector& other);
  friend SquareClassVector operator+(SquareClassVector a, const SquareClassVector& b) {
    a += b;
    return a;
  }
  friend bool operator==(const SquareClassVector&, const SquareClassVector&) = default;
  friend auto operator<=>(const SquareClassVector&, const SquareClassVector&) = default;

  std::string to_string() const;

 private:
  std::vector<std::string> support_;
};

enum class Independence { independent, dependent };

class SquareClassSpace {
 public:
  SquareClassSpace() = default;

  std::size_t dimension() const { return basis_.size(); }
  /// Reduced row-echelon basis, ordered by pivot label.
  const std::vector<SquareClassVector>& basis() const { return basis_; }

  /// Residual of v after elimination against the basis; zero iff v is in the span.
  SquareClassVector reduce(const SquareClassVector& v) const;
  bool contains(const SquareClassVector& v) const { return reduce(v).is_identity(); }

  /// Every element of the span. Only meant for small dimensions.
  std::vector<SquareClassVector> elements() const;

 private:
  friend std::pair<SquareClassSpace, Independence> insert_and_test_independent(
      const SquareClassSpace&, const SquareClassVector&);
  std::vector<SquareClassVector> basis_;
};

std::pair<SquareClassSpace, Independence> insert_and_test_independent(
    const SquareClassSpace& space, const SquareClassVector& v);

bool membership(const SquareClassSpace& space, const SquareClassVector& v);

SquareClassSpace span_of(const std::vector<SquareClassVector>& vectors);

/// Smallest space containing both arguments.
SquareClassSpace join(const SquareClassSpace& a, const SquareClassSpace& b);

/// nullopt when the spans meet only in [1]; otherwise a nonzero common element.
/// The witness is the A-side of the first dependency found by eliminating the
/// stacked bases of A then B.
std::optional<SquareClassVector> intersection_witness(const SquareClassSpace& a,
                                                      const SquareClassSpace& b);

inline bool intersection_trivial(const SquareClassSpace& a, const SquareClassSpace& b) {
  return !intersection_witness(a, b).has_value();
}

}  // namespace quadtower
