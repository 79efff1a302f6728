#include "apu/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace apu {
namespace oracles {

namespace {

// enumerate every ordered tuple of `len` distinct indices, filter at the leaf
template <typename Adjacent>
std::uint64_t tuples_filter(std::size_t n, int len, const Adjacent& adjacent) {
  std::uint64_t count = 0;
  std::vector<int> tuple(len);
  std::vector<bool> used(n, false);

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == len) {
      for (int i = 0; i < len; ++i) {
        const int j = (i + 1) % len;
        if (!adjacent(tuple[i], tuple[j])) return;
      }
      ++count;
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple[depth] = static_cast<int>(v);
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return count;
}

bool int_ratio_in_rd(std::uint64_t x, std::uint64_t y, int d) {
  const std::uint64_t g = std::gcd(x, y);
  return x / g <= static_cast<std::uint64_t>(d) && y / g <= static_cast<std::uint64_t>(d);
}

}  // namespace

std::uint64_t cycle_tuples_filter(const FiniteSet& b, int d, int two_k) {
  if (two_k < 4 || two_k % 2 != 0)
    throw std::invalid_argument("cycle_tuples_filter: tuple length must be even and >= 4");
  if (b.size() < static_cast<std::size_t>(two_k)) return 0;
  return tuples_filter(b.size(), two_k,
                       [&](int i, int j) { return in_rd(ratio_of(b[i], b[j]), d); });
}

std::uint64_t cycle_tuples_filter_ints(const std::vector<std::uint32_t>& b, int d, int two_k) {
  if (two_k < 4 || two_k % 2 != 0)
    throw std::invalid_argument("cycle_tuples_filter_ints: tuple length must be even and >= 4");
  if (b.size() < static_cast<std::size_t>(two_k)) return 0;
  return tuples_filter(b.size(), two_k,
                       [&](int i, int j) { return int_ratio_in_rd(b[i], b[j], d); });
}

std::uint64_t g_census_ints(const std::vector<std::uint32_t>& b, int d) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b[i] != b[j] && int_ratio_in_rd(b[i], b[j], d)) ++count;
  return count;
}

std::vector<Rational> intersect_elements(const ArithmeticProgression& p1,
                                         const ArithmeticProgression& p2) {
  auto e1 = p1.elements();
  auto e2 = p2.elements();
  std::vector<Rational> out;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(out));
  return out;
}

std::uint64_t divisor_count_slow(std::uint64_t m) {
  if (m == 0) throw std::domain_error("divisor_count_slow: m must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= m; ++i)
    if (m % i == 0) ++count;
  return count;
}

bool is_sidon(const std::vector<std::uint64_t>& a) {
  std::set<std::uint64_t> diffs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const std::uint64_t d = a[j] > a[i] ? a[j] - a[i] : a[i] - a[j];
      if (d == 0 || !diffs.insert(d).second) return false;
    }
  return true;
}

std::uint64_t w_triples_filter(const FiniteSet& a, const FiniteSet& b, int d) {
  std::uint64_t count = 0;
  for (const auto& x : a)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const Rational r1 = ratio_of(x, b[i]);
        const Rational r2 = ratio_of(x, b[j]);
        if (r1.is_integer() && r1.num() >= 1 && r1.num() <= d &&
            r2.is_integer() && r2.num() >= 1 && r2.num() <= d)
          ++count;
      }
  return count;
}

std::uint64_t mult_table_card_setbased(std::uint64_t n) {
  std::set<std::uint64_t> products;
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = i; j <= n; ++j) products.insert(i * j);
  return products.size();
}

}  // namespace oracles
}  // namespace apu
