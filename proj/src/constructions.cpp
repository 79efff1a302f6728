#include "apu/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace apu {

APFamily mult_table_family(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("mult_table_family: n must be >= 1");
  std::vector<ArithmeticProgression> rows;
  rows.reserve(n);
  for (std::uint64_t j = 1; j <= n; ++j)
    rows.emplace_back(Rational(int_from(j)), Rational(int_from(j)), n);
  return APFamily(std::move(rows));
}

std::uint64_t mult_table_card(std::uint64_t n, std::uint64_t budget_bits) {
  if (n < 1) throw std::invalid_argument("mult_table_card: n must be >= 1");
  if (n > budget_bits / n)
    throw budget_error("mult_table_card: n^2 bitmap exceeds budget");
  std::vector<bool> seen(n * n + 1, false);
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = i; j <= n; ++j)
      if (!seen[i * j]) { seen[i * j] = true; ++count; }
  return count;
}

namespace {

std::uint64_t floor_sqrt_ratio(std::uint64_t num_a, std::uint64_t num_b, std::uint64_t den) {
  // floor(sqrt(num_a*num_b/den)): largest x with x^2 * den <= num_a * num_b
  const Int target = int_from(num_a) * int_from(num_b);
  Int x = floor_sqrt(target / int_from(den));
  while (x * x * int_from(den) > target) --x;
  while ((x + 1) * (x + 1) * int_from(den) <= target) ++x;
  return mpz_get_ui(x.get_mpz_t());
}

}  // namespace

TightnessOutput tightness_sets(std::uint64_t m, std::uint64_t n, std::uint64_t d) {
  if (m < 1 || n < 1 || d < 1) throw std::invalid_argument("tightness_sets: m, n, d must be >= 1");
  TightnessOutput out;
  out.m = m; out.n = n; out.d = d;
  out.hypotheses_hold = int_from(m) <= 4 * int_from(n) * int_from(d) &&
                        int_from(n) <= 4 * int_from(m) * int_from(d) &&
                        int_from(d) <= 4 * int_from(m) * int_from(n);
  out.k = floor_sqrt_ratio(m, d, n);
  out.l = floor_sqrt_ratio(n, d, m);
  out.t = floor_sqrt_ratio(m, n, d);
  out.product = out.t * out.k * out.l;

  const Int base = int_from(out.k + out.l);
  std::vector<Rational> av, bv;
  for (std::uint64_t r = 1; r <= out.t; ++r) {
    const Int pw = pow_int(base, r);
    for (std::uint64_t i = 1; i <= out.k; ++i) av.emplace_back(pw * int_from(i));
    for (std::uint64_t j = 1; j <= out.l; ++j) bv.emplace_back(Rational(pw, int_from(j)));
  }
  // base-(k+l) positional uniqueness makes the values distinct whenever
  // k+l >= 2 and both k,l >= 1; collect() tolerates the degenerate regimes
  out.a = FiniteSet::collect(std::move(av));
  out.b = FiniteSet::collect(std::move(bv));

  if (!out.hypotheses_hold) {
    out.note = "hypotheses violated; construction emitted, verification skipped";
    return out;
  }
  out.bound_applicable = out.product >= 1;
  out.f = f_count(out.a, out.b, static_cast<int>(d));
  const bool sizes_ok = out.a.size() <= m && out.b.size() <= n;
  const bool f_ok = out.f >= out.product;
  const bool bound_ok =
      !out.bound_applicable ||
      int_from(8 * out.product) * int_from(8 * out.product) >= int_from(m) * int_from(n) * int_from(d);
  out.verified = sizes_ok && f_ok && bound_ok;
  if (!out.bound_applicable)
    out.note = "t*k*l = 0: some radicand below 1, the floor certificate does not apply";
  return out;
}

ExactRegimeOutput exact_regime_sets(int which, std::uint64_t m, std::uint64_t n, std::uint64_t d) {
  if (m < 1 || n < 1 || d < 1) throw std::invalid_argument("exact_regime_sets: m, n, d must be >= 1");
  ExactRegimeOutput out;
  out.which = which;
  out.m = m; out.n = n; out.d = d;
  std::vector<Rational> av, bv;
  switch (which) {
    case 1: {
      if (int_from(d) < int_from(m) * int_from(n))
        throw std::invalid_argument("exact_regime_sets case 1 requires d >= m*n");
      for (std::uint64_t i = 1; i <= m; ++i) av.emplace_back(int_from(i));
      for (std::uint64_t j = 1; j <= n; ++j) bv.emplace_back(Rational(Int(1), int_from(j)));
      out.target = m * n;
      break;
    }
    case 2: {
      if (int_from(n) < int_from(m) * int_from(d))
        throw std::invalid_argument("exact_regime_sets case 2 requires n >= m*d");
      const Int base = int_from(d + 1);
      for (std::uint64_t i = 1; i <= m; ++i) {
        const Int pw = pow_int(base, i);
        av.emplace_back(pw);
        for (std::uint64_t k = 1; k <= d; ++k) bv.emplace_back(Rational(pw, int_from(k)));
      }
      out.target = m * d;
      break;
    }
    case 3: {
      if (int_from(m) < int_from(n) * int_from(d))
        throw std::invalid_argument("exact_regime_sets case 3 requires m >= n*d");
      const Int base = int_from(d + 1);
      for (std::uint64_t j = 1; j <= n; ++j) {
        const Int pw = pow_int(base, j);
        bv.emplace_back(pw);
        for (std::uint64_t k = 1; k <= d; ++k) av.emplace_back(pw * int_from(k));
      }
      out.target = n * d;
      break;
    }
    default:
      throw std::invalid_argument("exact_regime_sets: case must be 1, 2 or 3");
  }
  out.a = FiniteSet(std::move(av));
  out.b = FiniteSet(std::move(bv));
  out.f = f_count(out.a, out.b, static_cast<int>(d));
  out.upper = which == 1 ? out.a.size() * out.b.size()
            : which == 2 ? out.a.size() * d
                         : out.b.size() * d;
  out.verified = out.f == out.target && out.f == out.upper;
  return out;
}

namespace {

// Greedy state; each prefix of the sequence is itself the greedy solution,
// so the cache only ever grows. Generators are single-threaded by contract.
struct SidonCache {
  std::vector<std::uint64_t> elems{1};
  std::vector<bool> diff_used = std::vector<bool>(2, false);
  std::uint64_t candidate = 1;

  void grow_to(std::uint64_t m) {
    while (elems.size() < m) {
      ++candidate;
      bool ok = true;
      for (auto e : elems) {
        const std::uint64_t diff = candidate - e;
        if (diff < diff_used.size() && diff_used[diff]) { ok = false; break; }
      }
      if (!ok) continue;
      if (diff_used.size() <= candidate) diff_used.resize(2 * candidate, false);
      for (auto e : elems) diff_used[candidate - e] = true;
      elems.push_back(candidate);
    }
  }
};

SidonCache& sidon_cache() {
  static SidonCache cache;
  return cache;
}

}  // namespace

std::vector<std::uint64_t> sidon_set(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("sidon_set: m must be >= 1");
  auto& cache = sidon_cache();
  cache.grow_to(m);
  return {cache.elems.begin(), cache.elems.begin() + static_cast<std::ptrdiff_t>(m)};
}

namespace {

std::uint64_t smallest_m_with_pairs(std::uint64_t n) {
  std::uint64_t m = 1;
  while (m * (m - 1) / 2 < n) ++m;
  return m;
}

}  // namespace

U2Witness u2_witness(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("u2_witness: n must be >= 1");
  U2Witness w;
  w.n = n;
  w.m_star = smallest_m_with_pairs(n);
  w.pairs_below = (w.m_star - 1) * (w.m_star - 2) / 2;
  w.pairs_at = w.m_star * (w.m_star - 1) / 2;
  const auto sidon = sidon_set(w.m_star);

  // First n pairs in lexicographic order; they cover every Sidon element
  // (all pairs (s_1, s_j) come first and n >= m*-1), so the union is exactly
  // the m* Sidon points, and Sidon-ness makes the differences distinct.
  std::vector<bool> covered(sidon.size(), false);
  std::uint64_t covered_count = 0;
  w.pairs.reserve(n);
  for (std::size_t i = 0; i < sidon.size() && w.pairs.size() < n; ++i)
    for (std::size_t j = i + 1; j < sidon.size() && w.pairs.size() < n; ++j) {
      w.pairs.emplace_back(sidon[i], sidon[j]);
      if (!covered[i]) { covered[i] = true; ++covered_count; }
      if (!covered[j]) { covered[j] = true; ++covered_count; }
    }
  w.union_size = covered_count;
  return w;
}

APFamily u2_witness_family(const U2Witness& w) {
  std::vector<ArithmeticProgression> aps;
  aps.reserve(w.pairs.size());
  for (const auto& [lo, hi] : w.pairs)
    aps.emplace_back(Rational(int_from(lo)), Rational(int_from(hi - lo)), 2);
  return APFamily(std::move(aps));
}

RuzsaOutput ruzsa_triple_family(std::vector<long long> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.size() < 2) throw std::invalid_argument("ruzsa_triple_family: need at least two elements");
  RuzsaOutput out;
  out.input = a;

  // Lexicographically smallest (x, y) per positive difference: scan pairs in
  // (x, y) order and keep the first hit.
  std::map<long long, std::pair<long long, long long>> first_pair;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      first_pair.try_emplace(a[j] - a[i], a[i], a[j]);
  out.positive_differences = first_pair.size();
  for (const auto& [delta, pr] : first_pair) out.chosen.push_back(pr);

  std::set<long long> diffs;
  std::set<long long> allowed;  // (A+A) u 2A
  for (std::size_t i = 0; i < a.size(); ++i) {
    allowed.insert(2 * a[i]);
    for (std::size_t j = i; j < a.size(); ++j) allowed.insert(a[i] + a[j]);
  }
  bool contained = true;
  for (const auto& [x, y] : out.chosen) {
    diffs.insert(y - x);
    contained = contained && allowed.count(2 * x) && allowed.count(x + y) && allowed.count(2 * y);
  }
  out.diffs_distinct = diffs.size() == out.chosen.size();
  out.union_contained = contained;
  return out;
}

APFamily ruzsa_family(const RuzsaOutput& r) {
  std::vector<ArithmeticProgression> aps;
  aps.reserve(r.chosen.size());
  for (const auto& [x, y] : r.chosen)
    aps.emplace_back(Rational(Int(static_cast<long>(2 * x))), Rational(Int(static_cast<long>(y - x))), 3);
  return APFamily(std::move(aps));
}

}  // namespace apu
