#pragma once

#include <cstdint>
#include <vector>

#include "apu/rational.hpp"

namespace apu {

/// Exact sum over pairs i < j of gcd(a_i, a_j) / a_j.
/// Input must be strictly increasing positive integers.
Rational gcd_sum(const std::vector<Int>& a);

/// Same value for a = [1..n], via the Pillai function P(j) = sum_{d|j} d*phi(j/d):
///   S(n) = sum_{j=2}^n (P(j) - j)/j,
/// accumulated over the common denominator lcm(1..n) and reduced once.
Rational gcd_sum_fast_range(std::uint32_t n);

struct GrowthScanRow {
  std::uint64_t n = 0;
  Rational value;
  double normalized = 0;  // S(n) / (n ln n), defined for n >= 2
};

/// S(n) and S(n)/(n ln n) per n; pass iff the normalized ratios across the
/// scan stay within a factor-3 band (finite reflection of Theta(n log n)).
struct GrowthScanReport {
  std::vector<GrowthScanRow> rows;
  double ratio_min = 0;
  double ratio_max = 0;
  bool within_band = false;
};

GrowthScanReport gcd_sum_growth_scan(const std::vector<std::uint32_t>& ns);

/// max over i < j of a_j / gcd(a_i, a_j), with a witnessing pair.
/// Graham's conjecture (proved) asserts the maximum is >= n.
struct GrahamReport {
  Int max_quotient;
  Int witness_i;
  Int witness_j;
  bool ge_n = false;
  double averaging_shape = 0;  // n^(1-eps)/(2c) with the defaults eps=1/4, c=1
};

GrahamReport graham_quotient(const std::vector<Int>& a);

}  // namespace apu
