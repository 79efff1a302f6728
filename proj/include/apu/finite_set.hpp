#pragma once

#include <algorithm>
#include <vector>

#include "apu/rational.hpp"

namespace apu {

/// Finite set of positive rationals, stored strictly increasing.
class FiniteSet {
 public:
  FiniteSet() = default;

  /// Validating constructor: sorts, rejects duplicates and nonpositive values.
  explicit FiniteSet(std::vector<Rational> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!elems_[i].is_positive())
        throw std::invalid_argument("FiniteSet: elements must be positive");
      if (i > 0 && elems_[i] == elems_[i - 1])
        throw std::invalid_argument("FiniteSet: duplicate element");
    }
  }

  /// Builds from possibly-repeating values, deduplicating.
  static FiniteSet collect(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return FiniteSet(std::move(values));
  }

  static FiniteSet integers(std::uint64_t n) {
    std::vector<Rational> v;
    v.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) v.emplace_back(int_from(i));
    return FiniteSet(std::move(v));
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Rational& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Rational>& values() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Rational& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

 private:
  std::vector<Rational> elems_;
};

/// {1/s : s in S}; an involution, and the witness of f_d(m,n) = f_d(n,m).
inline FiniteSet reciprocal_transform(const FiniteSet& s) {
  std::vector<Rational> v;
  v.reserve(s.size());
  for (const auto& x : s) v.push_back(x.reciprocal());
  return FiniteSet(std::move(v));
}

}  // namespace apu
