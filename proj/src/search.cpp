#include "apu/search.hpp"

#include <algorithm>
#include <cmath>

#include "apu/rng.hpp"

namespace apu {

U2Exact u2_exact(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("u2_exact: n must be >= 1");
  U2Exact r;
  r.n = n;
  std::uint64_t m = 1 + static_cast<std::uint64_t>(std::sqrt(2.0 * static_cast<double>(n)));
  while (m * (m - 1) / 2 >= n) --m;
  while (m * (m - 1) / 2 < n) ++m;
  r.value = m;
  r.pairs_below = (m - 1) * (m - 2) / 2;
  r.pairs_at = m * (m - 1) / 2;
  return r;
}

namespace {

struct UnionTracker {
  std::vector<std::uint32_t> count;  // multiplicity per point
  std::uint64_t distinct = 0;

  explicit UnionTracker(std::size_t points) : count(points, 0) {}

  void add(const std::vector<std::uint32_t>& pts) {
    for (auto p : pts)
      if (count[p]++ == 0) ++distinct;
  }
  void remove(const std::vector<std::uint32_t>& pts) {
    for (auto p : pts)
      if (--count[p] == 0) --distinct;
  }
  std::uint64_t added_if(const std::vector<std::uint32_t>& pts) const {
    std::uint64_t fresh = 0;
    for (auto p : pts)
      if (count[p] == 0) ++fresh;
    return fresh;
  }
};

std::vector<std::uint32_t> ap_points(std::uint32_t start, std::uint32_t diff, std::uint32_t ell) {
  std::vector<std::uint32_t> pts(ell);
  for (std::uint32_t i = 0; i < ell; ++i) pts[i] = start + i * diff;
  return pts;
}

// Exact minimum for ell = 2: the minimum union size equals the smallest u such
// that some u-subset of [0, max_start+max_diff] realizes n distinct differences
// d <= max_diff by pairs whose smaller point is <= max_start. (A family's union
// is such a set; any such set yields a family whose union lies inside it, so
// the first feasible u is the minimum.) Enumeration starts at the pair-counting
// lower bound u2(n).
BoxSearchResult exact_pairs_sweep(std::uint32_t n, const SearchBox& box, std::uint64_t budget) {
  const std::uint32_t points = box.max_start + box.max_diff + 1;
  BoxSearchResult res;
  res.method = "exhaustive-pairs";

  std::vector<std::uint32_t> subset;
  std::vector<std::uint32_t> diff_seen(box.max_diff + 1, 0);
  std::uint32_t generation = 0;
  std::uint64_t nodes = 0;

  // distinct feasible differences within the chosen subset
  auto feasible_diffs = [&](const std::vector<std::uint32_t>& s) {
    ++generation;
    std::uint32_t distinct = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] > box.max_start) break;  // smaller endpoint must be a legal start
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        const std::uint32_t d = s[j] - s[i];
        if (d > box.max_diff) break;
        if (diff_seen[d] != generation) { diff_seen[d] = generation; ++distinct; }
      }
    }
    return distinct;
  };

  const std::uint64_t start_u = std::max<std::uint64_t>(2, u2_exact(n).value);
  for (std::uint64_t u = start_u; u <= points; ++u) {
    // lexicographic u-subsets of {0, ..., points-1}
    subset.resize(u);
    for (std::uint64_t i = 0; i < u; ++i) subset[i] = static_cast<std::uint32_t>(i);
    while (true) {
      if (++nodes > budget) throw budget_error("u_exact_in_box: subset budget exceeded");
      if (feasible_diffs(subset) >= n) {
        res.min_cardinality = u;
        res.nodes = nodes;
        // materialize a witness: first pair realizing each unused difference
        std::vector<bool> used(box.max_diff + 1, false);
        for (std::size_t i = 0; i < subset.size() && res.witness.size() < n; ++i) {
          if (subset[i] > box.max_start) break;
          for (std::size_t j = i + 1; j < subset.size() && res.witness.size() < n; ++j) {
            const std::uint32_t d = subset[j] - subset[i];
            if (d > box.max_diff) break;
            if (!used[d]) { used[d] = true; res.witness.emplace_back(subset[i], d); }
          }
        }
        return res;
      }
      // next subset
      std::size_t i = u;
      while (i > 0 && subset[i - 1] == points - u + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < u; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  throw std::logic_error("u_exact_in_box: no family fits the box");  // unreachable: diffs 1..n from 0 always fit
}

struct BranchState {
  std::uint32_t n, ell;
  SearchBox box;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::uint64_t incumbent = ~std::uint64_t{0};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> current, best;
  UnionTracker tracker;

  BranchState(std::uint32_t n_, std::uint32_t ell_, const SearchBox& b, std::uint64_t budget_)
      : n(n_), ell(ell_), box(b), budget(budget_),
        tracker(static_cast<std::size_t>(b.max_start) + static_cast<std::size_t>(b.max_diff) * (ell_ - 1) + 1) {}

  void descend(std::uint32_t level, std::uint32_t min_diff) {
    if (++nodes > budget) throw budget_error("u_exact_in_box: branch-and-bound budget exceeded");
    if (tracker.distinct >= incumbent) return;  // adding APs never shrinks the union
    if (level == n) {
      incumbent = tracker.distinct;
      best = current;
      return;
    }
    // candidates (diff, start), cheapest-growth first
    struct Cand { std::uint64_t fresh; std::uint32_t d, s; };
    std::vector<Cand> cands;
    const std::uint32_t remaining = n - level - 1;
    for (std::uint32_t d = min_diff; d + remaining <= box.max_diff; ++d)
      for (std::uint32_t s = 0; s <= box.max_start; ++s) {
        const auto pts = ap_points(s, d, ell);
        cands.push_back({tracker.added_if(pts), d, s});
      }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.fresh < b.fresh; });
    for (const auto& c : cands) {
      if (tracker.distinct + c.fresh >= incumbent) continue;
      const auto pts = ap_points(c.s, c.d, ell);
      tracker.add(pts);
      current.emplace_back(c.s, c.d);
      descend(level + 1, c.d + 1);
      current.pop_back();
      tracker.remove(pts);
    }
  }
};

}  // namespace

BoxSearchResult u_exact_in_box(std::uint32_t n, std::uint32_t ell, const SearchBox& box,
                               std::uint64_t budget) {
  if (n < 1 || ell < 1) throw std::invalid_argument("u_exact_in_box: n, ell must be >= 1");
  if (box.max_diff < n)
    throw std::invalid_argument("u_exact_in_box: max_diff must be >= n (n distinct differences)");

  BoxSearchResult res;
  if (ell == 1) {  // all single points may coincide
    res.min_cardinality = 1;
    res.method = "degenerate";
    for (std::uint32_t i = 1; i <= n; ++i) res.witness.emplace_back(0, i);
    return res;
  }
  if (n == 1) {
    res.min_cardinality = ell;
    res.method = "degenerate";
    res.witness.emplace_back(0, 1);
    return res;
  }
  if (ell == 2) return exact_pairs_sweep(n, box, budget);

  BranchState st(n, ell, box, budget);
  st.descend(0, 1);
  res.min_cardinality = st.incumbent;
  res.witness = st.best;
  res.nodes = st.nodes;
  res.method = "branch-and-bound";
  return res;
}

APFamily box_witness_family(const BoxSearchResult& r, std::uint32_t ell) {
  std::vector<ArithmeticProgression> aps;
  aps.reserve(r.witness.size());
  for (const auto& [s, d] : r.witness)
    aps.emplace_back(Rational(int_from(s)), Rational(int_from(d)), ell);
  return APFamily(std::move(aps));
}

namespace {

std::uint64_t union_size_of(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fam,
                            std::uint32_t ell, std::vector<std::uint64_t>& scratch) {
  scratch.clear();
  for (const auto& [s, d] : fam)
    for (std::uint32_t i = 0; i < ell; ++i)
      scratch.push_back(static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(i) * d);
  std::sort(scratch.begin(), scratch.end());
  return static_cast<std::uint64_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

}  // namespace

HeuristicResult u_upper_heuristic(std::uint32_t n, std::uint32_t ell, std::uint64_t budget,
                                  std::uint64_t seed, std::optional<SearchBox> box) {
  if (n < 1 || ell < 1) throw std::invalid_argument("u_upper_heuristic: n, ell must be >= 1");
  if (budget < 1) throw std::invalid_argument("u_upper_heuristic: budget must be >= 1");
  const std::uint32_t max_diff = box ? box->max_diff : std::max(n, 2 * n);
  const std::uint32_t max_start = box ? box->max_start : n * ell;
  if (max_diff < n)
    throw std::invalid_argument("u_upper_heuristic: box cannot hold n distinct differences");

  // dilate family {j, 2j, ..., ell*j}: start j, diff j
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fam;
  fam.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j) fam.emplace_back(std::min(j, max_start), j);

  std::vector<std::uint64_t> scratch;
  HeuristicResult res;
  res.family = fam;
  res.cardinality = union_size_of(fam, ell, scratch);
  ++res.evaluations;

  Rng rng(seed);
  std::uint64_t current = res.cardinality;
  while (res.evaluations < budget) {
    const auto slot = static_cast<std::size_t>(rng.below(n));
    const auto old_start = fam[slot].first;
    fam[slot].first = static_cast<std::uint32_t>(rng.below(max_start + 1));
    const std::uint64_t cand = union_size_of(fam, ell, scratch);
    ++res.evaluations;
    if (cand <= current) {
      current = cand;
      if (cand < res.cardinality) { res.cardinality = cand; res.family = fam; }
    } else {
      fam[slot].first = old_start;
    }
  }
  return res;
}

APFamily heuristic_family(const HeuristicResult& r, std::uint32_t ell) {
  std::vector<ArithmeticProgression> aps;
  aps.reserve(r.family.size());
  for (const auto& [s, d] : r.family)
    aps.emplace_back(Rational(int_from(s)), Rational(int_from(d)), ell);
  return APFamily(std::move(aps));
}

PiecewiseBoundResult piecewise_bound(std::uint64_t n, std::uint64_t ell, const BoundConstants& c) {
  if (n < 2 || ell < 2) throw std::invalid_argument("piecewise_bound: n, ell must be >= 2");
  if (!(c.epsilon > Rational(0) && c.epsilon < Rational(1)))
    throw std::domain_error("piecewise_bound: epsilon must lie in (0,1)");
  const Int a = c.epsilon.num();
  const Int b = c.epsilon.den();
  const unsigned long bu = mpz_get_ui(b.get_mpz_t());
  const Int big_n = int_from(n), big_l = int_from(ell);

  // ell <= n^((b-2a)/(2b))  <=>  ell^(2b) * n^max(2a-b,0) <= n^max(b-2a,0)
  const Int e1 = b - 2 * a;
  Int lhs = pow_int(big_l, 2 * bu);
  Int rhs(1);
  if (e1 >= 0) rhs = pow_int(big_n, mpz_get_ui(Int(e1).get_mpz_t()));
  else lhs *= pow_int(big_n, mpz_get_ui(Int(-e1).get_mpz_t()));

  PiecewiseBoundResult r;
  r.non_rigorous = c.non_rigorous;
  const double nd = static_cast<double>(n), ld = static_cast<double>(ell);
  const double eps = c.epsilon.to_double();
  if (lhs <= rhs) {
    r.regime = 1;
    r.value = c.c1 * std::pow(nd, 0.5 - eps) * ld;
    return r;
  }
  // ell >= n^((b-a)/b)  <=>  ell^b >= n^(b-a)
  if (pow_int(big_l, bu) >= pow_int(big_n, mpz_get_ui(Int(b - a).get_mpz_t()))) {
    r.regime = 3;
    r.value = c.c1 * std::pow(nd, 1.0 - eps) * ld;
    return r;
  }
  r.regime = 2;
  r.value = c.c1 * ld * ld;
  return r;
}

ConvexityBoundReport convexity_bound_audit(const APFamily& f, const Rational& epsilon) {
  if (!f.uniform_length())
    throw std::invalid_argument("convexity_bound_audit: lengths must be uniform");
  ConvexityBoundReport rep;
  const auto census = union_census(f);
  rep.union_size = census.cardinality;
  rep.w = w_count_family(f);
  const Int total = int_from(census.alpha_sum);  // n * ell
  const Int denom = total + 2 * int_from(rep.w);
  rep.bound = Rational(total * total, denom);
  rep.holds = Rational(int_from(rep.union_size)) >= rep.bound;
  const double n = static_cast<double>(f.size());
  const double ell = static_cast<double>(f[0].length());
  rep.regime_scale = std::max(n / ell, std::pow(n, epsilon.to_double()));
  return rep;
}

}  // namespace apu
