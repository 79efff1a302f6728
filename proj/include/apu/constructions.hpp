#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apu/progression.hpp"

namespace apu {

/// The n dilates A_j = { i*j : i in [n] }: start j, difference j, length n.
APFamily mult_table_family(std::uint64_t n);

/// M(n) = |{ i*j : i,j in [n] }| by a product-set bitmap; throws budget_error
/// when n^2 bits exceed the budget.
std::uint64_t mult_table_card(std::uint64_t n, std::uint64_t budget_bits = std::uint64_t{1} << 31);

/// Sets witnessing f_d(m,n) >= (1/8)sqrt(mnd) under m <= 4nd, n <= 4md, d <= 4mn:
///   k = floor(sqrt(md/n)), l = floor(sqrt(nd/m)), t = floor(sqrt(mn/d)),
///   A = {(k+l)^r * i},  B = {(k+l)^r / j},  r in [t], i in [k], j in [l].
/// The bound certificate is the exact comparison (8*t*k*l)^2 >= m*n*d, meaningful
/// when t*k*l >= 1 (the floor argument needs each radicand >= 1).
struct TightnessOutput {
  std::uint64_t m = 0, n = 0, d = 0;
  std::uint64_t k = 0, l = 0, t = 0;
  FiniteSet a;
  FiniteSet b;
  bool hypotheses_hold = false;
  std::uint64_t f = 0;            // f_count(A, B, d), when verified
  std::uint64_t product = 0;      // t*k*l
  bool bound_applicable = false;  // t*k*l >= 1
  bool verified = false;          // sizes, f >= tkl, and (8tkl)^2 >= mnd
  std::string note;
};

TightnessOutput tightness_sets(std::uint64_t m, std::uint64_t n, std::uint64_t d);

/// Exact-value constructions of the three degenerate regimes:
///   case 1 (d >= mn): f_d(m,n) = mn,  A = [m],           B = {1/j : j in [n]}
///   case 2 (n >= md): f_d(m,n) = md,  A = {(d+1)^i},     B = {(d+1)^i / k}
///   case 3 (m >= nd): f_d(m,n) = nd,  A = {(d+1)^j * k}, B = {(d+1)^j}
/// Case 1 uses the reciprocal-corrected orientation (the pair count is
/// symmetric in A and B under reciprocation).
struct ExactRegimeOutput {
  int which = 0;
  std::uint64_t m = 0, n = 0, d = 0;
  FiniteSet a;
  FiniteSet b;
  std::uint64_t target = 0;       // mn / md / nd
  std::uint64_t f = 0;
  std::uint64_t upper = 0;        // |A||B| / |A|d / |B|d
  bool verified = false;
};

ExactRegimeOutput exact_regime_sets(int which, std::uint64_t m, std::uint64_t n, std::uint64_t d);

/// Greedy Mian-Chowla Sidon set: m positive integers with all pairwise
/// differences distinct.
std::vector<std::uint64_t> sidon_set(std::uint64_t m);

/// n two-term APs with distinct differences whose union has exactly
/// m* = ceil(1/2 + sqrt(2n + 1/4)) elements, built from the first n pairs of a
/// Sidon set of size m*. The counting certificate: C(m*-1,2) < n <= C(m*,2).
struct U2Witness {
  std::uint64_t n = 0;
  std::uint64_t m_star = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // the APs, as point pairs
  std::uint64_t union_size = 0;
  std::uint64_t pairs_below = 0;  // C(m*-1, 2) < n
  std::uint64_t pairs_at = 0;     // C(m*, 2) >= n
};

U2Witness u2_witness(std::uint64_t n);
APFamily u2_witness_family(const U2Witness& w);

/// For each positive difference delta of A - A, the 3-term AP
/// (2a, a+b, 2b) where (a, b) is the lexicographically smallest pair with
/// b - a = delta. Differences are pairwise distinct and the union is contained
/// in (A+A) u 2A.
struct RuzsaOutput {
  std::vector<long long> input;               // sorted distinct
  std::vector<std::pair<long long, long long>> chosen;  // (a, b) per difference
  std::size_t positive_differences = 0;
  bool diffs_distinct = false;
  bool union_contained = false;
};

RuzsaOutput ruzsa_triple_family(std::vector<long long> a);
APFamily ruzsa_family(const RuzsaOutput& r);

}  // namespace apu
