#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apu/progression.hpp"

namespace apu {

/// u_2(n) = ceil(1/2 + sqrt(2n + 1/4)), computed in integer arithmetic as the
/// smallest m with C(m,2) >= n (the pair-counting certificate: each 2-term AP
/// is a point pair with its own difference, so C(|U|,2) >= n).
struct U2Exact {
  std::uint64_t n = 0;
  std::uint64_t value = 0;
  std::uint64_t pairs_below = 0;  // C(value-1, 2) < n
  std::uint64_t pairs_at = 0;     // C(value, 2) >= n
};

U2Exact u2_exact(std::uint64_t n);

/// Integer normalization domain for the union minimum: starts in
/// [0, max_start], pairwise distinct integer differences in [1, max_diff].
struct SearchBox {
  std::uint32_t max_start = 0;
  std::uint32_t max_diff = 0;
};

/// Exact minimum union cardinality over all families inside the box, with a
/// witness. Exact within the box only; a global claim needs the scaling
/// normalization argument and a large enough box.
struct BoxSearchResult {
  std::uint64_t min_cardinality = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> witness;  // (start, diff)
  std::uint64_t nodes = 0;
  std::string method;
};

BoxSearchResult u_exact_in_box(std::uint32_t n, std::uint32_t ell, const SearchBox& box,
                               std::uint64_t budget = std::uint64_t{1} << 26);

APFamily box_witness_family(const BoxSearchResult& r, std::uint32_t ell);

/// Seeded hill climbing from the dilate family {start j, diff j}; returns a
/// valid family and its union size, never an optimality claim. The optional
/// box keeps the heuristic comparable with u_exact_in_box.
struct HeuristicResult {
  std::uint64_t cardinality = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> family;  // (start, diff)
  std::uint64_t evaluations = 0;
};

HeuristicResult u_upper_heuristic(std::uint32_t n, std::uint32_t ell, std::uint64_t budget,
                                  std::uint64_t seed,
                                  std::optional<SearchBox> box = std::nullopt);

APFamily heuristic_family(const HeuristicResult& r, std::uint32_t ell);

/// Proof constants, caller-supplied; defaults of 1 are flagged non-rigorous
/// (the provable values are astronomically large, making the asymptotic
/// inequalities vacuous at desk scale). c5 and c6 are one proof constant
/// under two names; both fields are kept.
struct BoundConstants {
  Rational epsilon{1, 4};
  double c1 = 1.0;
  double c5 = 1.0;
  double c6 = 1.0;
  double c7 = 1.0;
  bool non_rigorous = true;
};

/// Piecewise lower-bound formula evaluation:
///   regime 1: ell <= n^(1/2-eps)          -> c1 * n^(1/2-eps) * ell
///   regime 3: ell >= n^(1-eps)            -> c1 * n^(1-eps) * ell
///   regime 2: otherwise                   -> c1 * ell^2
/// Regime selection is exact (integer powers of n and ell).
struct PiecewiseBoundResult {
  int regime = 0;
  double value = 0;
  bool non_rigorous = true;
};

PiecewiseBoundResult piecewise_bound(std::uint64_t n, std::uint64_t ell, const BoundConstants& c);

/// Exact convexity bound for any uniform-length family:
///   |U| * (n*ell + 2W) >= (n*ell)^2, i.e. |U| >= (nl)^2/(nl + 2W).
struct ConvexityBoundReport {
  std::uint64_t union_size = 0;
  std::uint64_t w = 0;
  Rational bound;
  double regime_scale = 0;  // max(n/ell, n^eps), informational
  bool holds = false;
};

ConvexityBoundReport convexity_bound_audit(const APFamily& f, const Rational& epsilon);

}  // namespace apu
