#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apu/finite_set.hpp"
#include "apu/number_theory.hpp"

namespace apu {

/// R_d = { k/l : k,l in [d] }, as distinct lowest-term values.
FiniteSet rd_members(int d);

/// |R_d| = 2 * sum_{q<=d} phi(q) - 1, without enumeration.
std::uint64_t rd_size(int d);

/// Membership r in R_d: in lowest terms both numerator and denominator <= d.
bool in_rd(const Rational& r, int d);

/// Graph on the elements of B, edges between pairs with ratio in R_d.
/// Adjacency as per-vertex bitmasks; capped at 64 vertices.
struct RatioGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  bool edge(int i, int j) const { return (adj[i] >> j) & 1u; }
};

RatioGraph ratio_graph(const FiniteSet& b, int d);

/// |G_d(B)|: unordered pairs of distinct elements with ratio in R_d.
std::uint64_t g_census(const FiniteSet& b, int d);

/// |C_{d,2k}(B)|: ordered 2k-tuples of pairwise-distinct elements whose
/// consecutive ratios, cyclically, all lie in R_d. Equals 2*(2k) times the
/// number of undirected 2k-cycles in the ratio graph. Rejects odd two_k.
std::uint64_t cycle_census(const FiniteSet& b, int d, int two_k);

/// Census restricted to a vertex subset given as a bitmask.
std::uint64_t g_count_masked(const RatioGraph& g, std::uint64_t mask);
std::uint64_t cycle_count_masked(const RatioGraph& g, std::uint64_t mask, int two_k);

/// Results bundle for the pair/cycle/f/W censuses of given finite sets.
struct RatioCensus {
  std::uint64_t g_count = 0;
  std::map<int, std::uint64_t> cycle_counts;  // keyed by 2k
  std::uint64_t f_count = 0;
  std::uint64_t w_count = 0;
};

RatioCensus census_all(const FiniteSet& a, const FiniteSet& b, int d,
                       const std::vector<int>& two_ks);

/// Cycle-count lower inequality: (1/4k)|C_{d,2k}(B)| >= |G_d(B)| - 100k|B|^(1+1/k),
/// decided exactly ((4kG - C)^k <= (400k^2)^k * |B|^(k+1) when 4kG > C).
struct BasicLowerReport {
  std::uint64_t g = 0;
  std::uint64_t c = 0;
  int k = 0;
  std::size_t n = 0;
  double lhs = 0;          // C/(4k), informational
  double rhs = 0;          // G - 100k n^(1+1/k), informational
  bool holds = false;
};

BasicLowerReport basic_lower_check(const FiniteSet& b, int d, int k);

/// Monte Carlo audit of the expectation identities
///   E|C_{d,2k}(B_p)| = |C_{d,2k}(B)| p^(2k),  E|G_d(B_p)| = |G_d(B)| p^2,
/// where B_p keeps each element independently with probability p.
/// Pass iff each prediction lies within 4 standard errors of the sample mean.
struct ExpectationReport {
  std::uint64_t exact_g = 0;
  std::uint64_t exact_c = 0;
  double predicted_g = 0;
  double predicted_c = 0;
  double mean_g = 0;
  double mean_c = 0;
  double se_g = 0;
  double se_c = 0;
  std::uint64_t trials = 0;
  bool pass_g = false;
  bool pass_c = false;
  bool pass = false;
};

ExpectationReport subsample_expectation_check(const FiniteSet& b, int d, int k,
                                              const Rational& p, std::uint64_t trials,
                                              std::uint64_t seed);

/// N(m) = #{t-tuples in [d]^t with product m}, by dynamic programming.
/// Reports sum_m N(m)^2 and checks it against sum_{m<=d^t} d(m)^t, the
/// divisor-power majorization behind the cycle upper bound.
struct ProductRepReport {
  Int sum_squares;
  Int divisor_power_sum;
  Int table_size;  // d^t
  bool holds = false;
};

ProductRepReport product_rep_audit(int d, int t, std::uint64_t budget = 1u << 24);

/// #{(a,b) in A x B : a/b is an integer in [1,d]}.
std::uint64_t f_count(const FiniteSet& a, const FiniteSet& b, int d);

/// #{(a,b1,b2) in A x B^2 : b1 < b2, a/b1 in [d], a/b2 in [d]};
/// equals sum_{a in A} C(deg(a), 2) with deg(a) = #{b : a/b in [d]}.
std::uint64_t w_triple_count(const FiniteSet& a, const FiniteSet& b, int d);

/// Exact form of the counting chain bounding W by pair censuses of B:
///   W <= |G_d(B)| + sum_{q=2}^{d-1} |G_q(B)| * d/(q(q+1)).
struct WChainReport {
  std::uint64_t w = 0;
  Rational rhs;
  bool holds = false;
};

WChainReport w_chain_check(const FiniteSet& a, const FiniteSet& b, int d);

}  // namespace apu
