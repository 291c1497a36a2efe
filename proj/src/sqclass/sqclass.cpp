#include "quadtower/sqclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadtower {

SquareClassVector::SquareClassVector(std::initializer_list<std::string> labels) {
  for (const auto& l : labels) toggle(l);
}

SquareClassVector::SquareClassVector(std::vector<std::string> labels) {
  for (auto& l : labels) toggle(l);
}

void SquareClassVector::toggle(const std::string& label) {
  auto it = std::lower_bound(support_.begin(), support_.end(), label);
  if (it != support_.end() && *it == label)
    support_.erase(it);
  else
    support_.insert(it, label);
}

bool SquareClassVector::contains(const std::string& label) const {
  return std::binary_search(support_.begin(), support_.end(), label);
}

SquareClassVector& SquareClassVector::operator+=(const SquareClassVector& other) {
  std::vector<std::string> out;
  out.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(),
                                other.support_.end(), std::back_inserter(out));
  support_ = std::move(out);
  return *this;
}

std::string SquareClassVector::to_string() const {
  if (support_.empty()) return "[1]";
  std::string s = "{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) s += ", ";
    s += support_[i];
  }
  return s + "}";
}

SquareClassVector SquareClassSpace::reduce(const SquareClassVector& v) const {
  // Reduced echelon form: each pivot occurs in exactly one basis vector, so a
  // single pass over the pivots present in v is enough.
  SquareClassVector r = v;
  for (const auto& b : basis_)
    if (r.contains(b.pivot())) r += b;
  return r;
}

std::vector<SquareClassVector> SquareClassSpace::elements() const {
  if (basis_.size() > 20) throw std::length_error("span too large to enumerate");
  std::vector<SquareClassVector> out;
  const std::size_t n = std::size_t{1} << basis_.size();
  out.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    SquareClassVector e;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (mask >> i & 1) e += basis_[i];
    out.push_back(std::move(e));
  }
  return out;
}

std::pair<SquareClassSpace, Independence> insert_and_test_independent(
    const SquareClassSpace& space, const SquareClassVector& v) {
  SquareClassVector r = space.reduce(v);
  if (r.is_identity()) return {space, Independence::dependent};

  SquareClassSpace out = space;
  const std::string& p = r.pivot();
  for (auto& b : out.basis_)
    if (b.contains(p)) b += r;
  auto pos = std::lower_bound(out.basis_.begin(), out.basis_.end(), p,
                              [](const SquareClassVector& b, const std::string& label) {
                                return b.pivot() < label;
                              });
  out.basis_.insert(pos, std::move(r));
  return {std::move(out), Independence::independent};
}

bool membership(const SquareClassSpace& space, const SquareClassVector& v) {
  return space.contains(v);
}

SquareClassSpace span_of(const std::vector<SquareClassVector>& vectors) {
  SquareClassSpace s;
  for (const auto& v : vectors) s = insert_and_test_independent(s, v).first;
  return s;
}

SquareClassSpace join(const SquareClassSpace& a, const SquareClassSpace& b) {
  SquareClassSpace s = a;
  for (const auto& v : b.basis()) s = insert_and_test_independent(s, v).first;
  return s;
}

std::optional<SquareClassVector> intersection_witness(const SquareClassSpace& a,
                                                      const SquareClassSpace& b) {
  const std::size_t na = a.dimension();
  const std::size_t total = na + b.dimension();

  struct Row {
    SquareClassVector v;
    std::vector<bool> combo;
  };
  std::vector<Row> echelon;  // pivot = smallest label, pivots pairwise distinct

  for (std::size_t idx = 0; idx < total; ++idx) {
    Row r{idx < na ? a.basis()[idx] : b.basis()[idx - na], std::vector<bool>(total, false)};
    r.combo[idx] = true;
    for (;;) {
      if (r.v.is_identity()) {
        SquareClassVector witness;
        for (std::size_t i = 0; i < na; ++i)
          if (r.combo[i]) witness += a.basis()[i];
        return witness;
      }
      auto hit = std::find_if(echelon.begin(), echelon.end(),
                              [&](const Row& e) { return e.v.pivot() == r.v.pivot(); });
      if (hit == echelon.end()) break;
      r.v += hit->v;
      for (std::size_t i = 0; i < total; ++i) r.combo[i] = r.combo[i] != hit->combo[i];
    }
    echelon.push_back(std::move(r));
  }
  return std::nullopt;
}

}  // namespace quadtower
