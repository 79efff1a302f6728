#include "apu/ratio_census.hpp"

#include <cmath>

#include "apu/rng.hpp"

namespace apu {

FiniteSet rd_members(int d) {
  if (d < 1) throw std::invalid_argument("rd_members: d must be >= 1");
  std::vector<Rational> out;
  for (long k = 1; k <= d; ++k)
    for (long l = 1; l <= d; ++l) {
      if (std::gcd(k, l) != 1) continue;  // lowest terms only, once
      out.emplace_back(k, l);
    }
  return FiniteSet(std::move(out));
}

std::uint64_t rd_size(int d) {
  if (d < 1) throw std::invalid_argument("rd_size: d must be >= 1");
  auto phi = euler_phi_table(static_cast<std::uint32_t>(d));
  std::uint64_t s = 0;
  for (int q = 1; q <= d; ++q) s += phi[q];
  return 2 * s - 1;
}

bool in_rd(const Rational& r, int d) {
  if (!r.is_positive()) return false;
  return r.num() <= d && r.den() <= d;
}

RatioGraph ratio_graph(const FiniteSet& b, int d) {
  if (b.size() > 64) throw budget_error("ratio_graph: at most 64 elements supported");
  RatioGraph g;
  g.n = static_cast<int>(b.size());
  g.adj.assign(b.size(), 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      if (!in_rd(ratio_of(b[i], b[j]), d)) continue;
      g.adj[i] |= std::uint64_t{1} << j;
      g.adj[j] |= std::uint64_t{1} << i;
    }
  return g;
}

std::uint64_t g_census(const FiniteSet& b, int d) {
  if (d < 1) throw std::invalid_argument("g_census: d must be >= 1");
  std::uint64_t count = 0;
  const auto n = b.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (in_rd(ratio_of(b[i], b[j]), d)) ++count;
  return count;
}

std::uint64_t g_count_masked(const RatioGraph& g, std::uint64_t mask) {
  std::uint64_t count = 0;
  for (int i = 0; i < g.n; ++i)
    if ((mask >> i) & 1u)
      count += static_cast<std::uint64_t>(__builtin_popcountll(g.adj[i] & mask & ~((std::uint64_t{2} << i) - 1)));
  return count;
}

namespace {

// Undirected simple cycles of length `len` through start vertex `s`, using
// only vertices with index > s, counted once per cycle (direction fixed by
// requiring the second vertex to have a smaller index than the last).
std::uint64_t cycles_from(const RatioGraph& g, std::uint64_t mask, int s, int len) {
  std::uint64_t total = 0;
  std::uint64_t visited = std::uint64_t{1} << s;
  const std::uint64_t allowed = mask & ~((std::uint64_t{2} << s) - 1);  // indices > s

  // iterative DFS over (vertex, next-neighbor cursor)
  struct Frame { int v; int next; };
  std::vector<Frame> stack{{s, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const int depth = static_cast<int>(stack.size()) - 1;  // edges used so far
    bool descended = false;
    for (int j = f.next; j < g.n; ++j) {
      if (!((allowed >> j) & 1u) || ((visited >> j) & 1u)) continue;
      if (!g.edge(f.v, j)) continue;
      if (depth + 1 == len - 1) {
        // j would be the last vertex: close the cycle if adjacent to s,
        // counting each cycle once (second vertex < last vertex).
        if (g.edge(j, s) && stack.size() >= 2 && stack[1].v < j) ++total;
        continue;
      }
      f.next = j + 1;
      stack.push_back({j, 0});
      visited |= std::uint64_t{1} << j;
      descended = true;
      break;
    }
    if (!descended) {
      visited &= ~(std::uint64_t{1} << f.v);
      stack.pop_back();
    }
  }
  return total;
}

}  // namespace

std::uint64_t cycle_count_masked(const RatioGraph& g, std::uint64_t mask, int two_k) {
  if (two_k < 4 || two_k % 2 != 0)
    throw std::invalid_argument("cycle_census: tuple length must be even and >= 4");
  if (static_cast<int>(__builtin_popcountll(mask)) < two_k) return 0;
  std::uint64_t cycles = 0;
  for (int s = 0; s < g.n; ++s)
    if ((mask >> s) & 1u) cycles += cycles_from(g, mask, s, two_k);
  return cycles * 2 * static_cast<std::uint64_t>(two_k);
}

std::uint64_t cycle_census(const FiniteSet& b, int d, int two_k) {
  if (two_k < 4 || two_k % 2 != 0)
    throw std::invalid_argument("cycle_census: tuple length must be even and >= 4");
  if (b.size() < static_cast<std::size_t>(two_k)) return 0;
  RatioGraph g = ratio_graph(b, d);
  const std::uint64_t full = (b.size() == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << b.size()) - 1;
  return cycle_count_masked(g, full, two_k);
}

RatioCensus census_all(const FiniteSet& a, const FiniteSet& b, int d,
                       const std::vector<int>& two_ks) {
  RatioCensus out;
  out.g_count = g_census(b, d);
  for (int tk : two_ks) out.cycle_counts[tk] = cycle_census(b, d, tk);
  out.f_count = f_count(a, b, d);
  out.w_count = w_triple_count(a, b, d);
  return out;
}

BasicLowerReport basic_lower_check(const FiniteSet& b, int d, int k) {
  if (k < 2) throw std::invalid_argument("basic_lower_check: k must be >= 2");
  BasicLowerReport r;
  r.k = k;
  r.n = b.size();
  r.g = g_census(b, d);
  r.c = cycle_census(b, d, 2 * k);
  const double n = static_cast<double>(r.n);
  r.lhs = static_cast<double>(r.c) / (4.0 * k);
  r.rhs = static_cast<double>(r.g) - 100.0 * k * std::pow(n, 1.0 + 1.0 / k);
  // Exact decision: C >= 4kG always passes; otherwise compare k-th powers.
  const Int big_c = int_from(r.c);
  const Int big_g = int_from(r.g);
  const Int deficit = 4 * k * big_g - big_c;
  if (deficit <= 0) {
    r.holds = true;
  } else {
    const Int lhs_pow = pow_int(deficit, static_cast<unsigned long>(k));
    const Int rhs_pow = pow_int(Int(400) * k * k, static_cast<unsigned long>(k)) *
                        pow_int(int_from(r.n), static_cast<unsigned long>(k) + 1);
    r.holds = lhs_pow <= rhs_pow;
  }
  return r;
}

ExpectationReport subsample_expectation_check(const FiniteSet& b, int d, int k,
                                              const Rational& p, std::uint64_t trials,
                                              std::uint64_t seed) {
  if (!(p > Rational(0)) || p > Rational(1))
    throw std::domain_error("subsample_expectation_check: p must lie in (0,1]");
  if (trials < 1) throw std::invalid_argument("subsample_expectation_check: trials >= 1");
  const int two_k = 2 * k;
  ExpectationReport rep;
  rep.trials = trials;
  rep.exact_g = g_census(b, d);
  rep.exact_c = cycle_census(b, d, two_k);
  const double pd = p.to_double();
  rep.predicted_g = static_cast<double>(rep.exact_g) * pd * pd;
  rep.predicted_c = static_cast<double>(rep.exact_c) * std::pow(pd, two_k);

  const RatioGraph graph = ratio_graph(b, d);
  const bool keep_all = (p == Rational(1));
  const std::uint64_t thr = keep_all ? 0 : bernoulli_threshold(p);
  Rng rng(seed);

  long double sum_g = 0, sum_g2 = 0, sum_c = 0, sum_c2 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (keep_all || rng.next() < thr) mask |= std::uint64_t{1} << i;
    const auto g = static_cast<long double>(g_count_masked(graph, mask));
    const auto c = static_cast<long double>(cycle_count_masked(graph, mask, two_k));
    sum_g += g; sum_g2 += g * g;
    sum_c += c; sum_c2 += c * c;
  }
  const long double nt = static_cast<long double>(trials);
  rep.mean_g = static_cast<double>(sum_g / nt);
  rep.mean_c = static_cast<double>(sum_c / nt);
  const long double var_g = std::max(0.0L, sum_g2 / nt - (sum_g / nt) * (sum_g / nt));
  const long double var_c = std::max(0.0L, sum_c2 / nt - (sum_c / nt) * (sum_c / nt));
  rep.se_g = static_cast<double>(std::sqrt(var_g / nt));
  rep.se_c = static_cast<double>(std::sqrt(var_c / nt));

  auto within = [](double mean, double pred, double se) {
    const double diff = std::abs(mean - pred);
    return se == 0 ? diff == 0 : diff <= 4.0 * se;
  };
  rep.pass_g = within(rep.mean_g, rep.predicted_g, rep.se_g);
  rep.pass_c = within(rep.mean_c, rep.predicted_c, rep.se_c);
  rep.pass = rep.pass_g && rep.pass_c;
  return rep;
}

ProductRepReport product_rep_audit(int d, int t, std::uint64_t budget) {
  if (d < 1 || t < 1) throw std::invalid_argument("product_rep_audit: d, t must be >= 1");
  // table of size d^t; refuse anything over budget
  long double est = std::pow(static_cast<long double>(d), static_cast<long double>(t));
  if (est > static_cast<long double>(budget))
    throw budget_error("product_rep_audit: d^t exceeds budget");
  std::uint64_t cap = 1;
  for (int i = 0; i < t; ++i) cap *= static_cast<std::uint64_t>(d);

  std::vector<std::uint64_t> counts(cap + 1, 0);
  counts[1] = 1;
  std::vector<std::uint64_t> next(cap + 1, 0);
  for (int step = 0; step < t; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint64_t m = 1; m <= cap; ++m) {
      if (!counts[m]) continue;
      for (std::uint64_t f = 1; f <= static_cast<std::uint64_t>(d); ++f) {
        const std::uint64_t prod = m * f;
        if (prod > cap) break;
        next[prod] += counts[m];
      }
    }
    counts.swap(next);
  }

  ProductRepReport rep;
  rep.table_size = int_from(cap);
  Int sum_sq = 0;
  for (std::uint64_t m = 1; m <= cap; ++m)
    if (counts[m]) sum_sq += int_from(counts[m]) * int_from(counts[m]);
  rep.sum_squares = sum_sq;

  auto dtab = divisor_count_table(static_cast<std::uint32_t>(cap));
  Int dsum = 0;
  for (std::uint64_t m = 1; m <= cap; ++m)
    dsum += pow_int(int_from(dtab[m]), static_cast<unsigned long>(t));
  rep.divisor_power_sum = dsum;
  rep.holds = rep.sum_squares <= rep.divisor_power_sum;
  return rep;
}

namespace {

bool integer_ratio_in_d(const Rational& a, const Rational& b, int d) {
  const Rational r = ratio_of(a, b);
  return r.is_integer() && r.num() >= 1 && r.num() <= d;
}

}  // namespace

std::uint64_t f_count(const FiniteSet& a, const FiniteSet& b, int d) {
  if (d < 1) throw std::invalid_argument("f_count: d must be >= 1");
  std::uint64_t count = 0;
  for (const auto& x : a)
    for (const auto& y : b)
      if (integer_ratio_in_d(x, y, d)) ++count;
  return count;
}

std::uint64_t w_triple_count(const FiniteSet& a, const FiniteSet& b, int d) {
  if (d < 1) throw std::invalid_argument("w_triple_count: d must be >= 1");
  std::uint64_t count = 0;
  for (const auto& x : a) {
    std::uint64_t deg = 0;
    for (const auto& y : b)
      if (integer_ratio_in_d(x, y, d)) ++deg;
    count += deg * (deg - 1) / 2;
  }
  return count;
}

WChainReport w_chain_check(const FiniteSet& a, const FiniteSet& b, int d) {
  WChainReport rep;
  rep.w = w_triple_count(a, b, d);
  Rational rhs(int_from(g_census(b, d)));
  for (int q = 2; q <= d - 1; ++q)
    rhs += Rational(int_from(g_census(b, q))) * Rational(Int(d), Int(q) * (q + 1));
  rep.rhs = rhs;
  rep.holds = Rational(int_from(rep.w)) <= rhs;
  return rep;
}

}  // namespace apu
