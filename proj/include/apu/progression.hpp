#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apu/finite_set.hpp"
#include "apu/ratio_census.hpp"

namespace apu {

/// Finite arithmetic progression start, start+diff, ..., start+(length-1)*diff.
/// Start may be any rational (any sign); the difference must be positive.
class ArithmeticProgression {
 public:
  ArithmeticProgression(Rational start, Rational diff, std::uint64_t length)
      : start_(std::move(start)), diff_(std::move(diff)), length_(length) {
    if (!diff_.is_positive()) throw std::invalid_argument("ArithmeticProgression: difference must be positive");
    if (length_ < 1) throw std::invalid_argument("ArithmeticProgression: length must be >= 1");
  }

  const Rational& start() const { return start_; }
  const Rational& diff() const { return diff_; }
  std::uint64_t length() const { return length_; }

  Rational element(std::uint64_t j) const {  // j in [0, length)
    return start_ + Rational(int_from(j)) * diff_;
  }
  Rational last() const { return element(length_ - 1); }

  std::vector<Rational> elements() const {
    std::vector<Rational> out;
    out.reserve(length_);
    Rational x = start_;
    for (std::uint64_t j = 0; j < length_; ++j) {
      out.push_back(x);
      x += diff_;
    }
    return out;
  }

  bool contains(const Rational& x) const {
    if (x < start_ || last() < x) return false;
    const Rational idx = (x - start_) / diff_;
    return idx.is_integer();
  }

 private:
  Rational start_;
  Rational diff_;
  std::uint64_t length_;
};

/// Exact intersection; itself an AP (empty -> nullopt, single point -> length 1
/// with conventional difference 1). For integer differences and >= 2 common
/// elements the returned difference is lcm of the two differences.
std::optional<ArithmeticProgression> intersect(const ArithmeticProgression& p1,
                                               const ArithmeticProgression& p2);

std::uint64_t intersection_size(const ArithmeticProgression& p1,
                                const ArithmeticProgression& p2);

/// |P1 cap P2| <= 1 + l*gcd(q,q')/max(q,q') for integer differences q, q' and
/// equal lengths l. The span argument would give the sharper (l-1)q/lcm form;
/// the stated bound is the one asserted, slack and all.
struct IntersectionBoundReport {
  std::uint64_t size = 0;
  Rational bound;
  bool holds = false;
};

IntersectionBoundReport intersection_size_bound_check(const ArithmeticProgression& p1,
                                                      const ArithmeticProgression& p2);

/// If two equal-length-l APs share r >= 2 elements, the ratio of their
/// differences lies in R_floor((l-1)/(r-1)). Vacuously true for r <= 1.
struct DifferenceRatioReport {
  std::uint64_t r = 0;
  int ratio_bound = 0;    // floor((l-1)/(r-1)) when r >= 2
  Rational diff_ratio;
  bool vacuous = false;
  bool holds = false;
};

DifferenceRatioReport difference_ratio_check(const ArithmeticProgression& p1,
                                                 const ArithmeticProgression& p2);

/// Ordered list of APs with pairwise distinct differences.
class APFamily {
 public:
  explicit APFamily(std::vector<ArithmeticProgression> members);

  std::size_t size() const { return members_.size(); }
  const ArithmeticProgression& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<ArithmeticProgression>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::uint64_t total_length() const;
  bool uniform_length() const;
  bool integer_differences() const;

 private:
  std::vector<ArithmeticProgression> members_;
};

/// |U| together with alpha(x) = #{i : x in P_i}: per-point multiplicities
/// keyed by exact value, plus the aggregated histogram.
struct UnionCensus {
  std::uint64_t cardinality = 0;
  std::vector<std::pair<Rational, std::uint64_t>> points;         // sorted (x, alpha)
  std::map<std::uint64_t, std::uint64_t> multiplicity_histogram;  // alpha -> #points
  std::uint64_t alpha_sum = 0;   // equals sum of lengths
};

UnionCensus union_census(const APFamily& f);

/// W = sum_{i1<i2} |P_i1 cap P_i2|; equals sum_x C(alpha(x), 2).
std::uint64_t w_count_family(const APFamily& f);

/// Dawson-Sankoff: |U| >= (sum |A_i|)^2 / sum_{i,j} |A_i cap A_j|, the double
/// sum over ordered pairs including i = j.
Rational dawson_sankoff_bound(const APFamily& f);

/// Exact check of the gcd-sum union bound for integer-difference families of
/// uniform length l with differences a_1 < ... < a_n:
///   |U| >= (nl)^2 / (nl + n^2 + 2l * sum_{i<j} gcd(a_i,a_j)/a_j).
struct GcdSumBoundReport {
  std::uint64_t union_size = 0;
  Rational bound;
  bool holds = false;
};

GcdSumBoundReport gcdsum_union_bound_check(const APFamily& f);

}  // namespace apu
