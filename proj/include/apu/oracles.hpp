#pragma once

#include <cstdint>
#include <vector>

#include "apu/progression.hpp"

namespace apu {
namespace oracles {

/// Brute-force counterparts of library operations, kept deliberately naive and
/// implementation-independent; the audit suites compare library results
/// against these.

/// Ordered 2k-tuples of pairwise-distinct elements with all consecutive
/// ratios (cyclically) in R_d, by full permutation enumeration and filtering.
std::uint64_t cycle_tuples_filter(const FiniteSet& b, int d, int two_k);

/// Same filter over a set of integers with its own ratio test (integer
/// cross-gcd, no Rational machinery).
std::uint64_t cycle_tuples_filter_ints(const std::vector<std::uint32_t>& b, int d, int two_k);

/// Pair census by direct ratio checks on integers.
std::uint64_t g_census_ints(const std::vector<std::uint32_t>& b, int d);

/// Intersection by materializing both element lists and merging.
std::vector<Rational> intersect_elements(const ArithmeticProgression& p1,
                                         const ArithmeticProgression& p2);

/// Divisor count by the dumbest loop: try every i <= m.
std::uint64_t divisor_count_slow(std::uint64_t m);

/// All pairwise differences distinct, checked pair against pair.
bool is_sidon(const std::vector<std::uint64_t>& a);

/// W by literal triple enumeration over A x {pairs of B}.
std::uint64_t w_triples_filter(const FiniteSet& a, const FiniteSet& b, int d);

/// Union cardinality of { i*j : i,j in [n] } via an std::set, no bitmap.
std::uint64_t mult_table_card_setbased(std::uint64_t n);

}  // namespace oracles
}  // namespace apu
