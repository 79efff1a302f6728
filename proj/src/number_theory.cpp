#include "apu/number_theory.hpp"

#include <cmath>
#include <numeric>

namespace apu {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

std::uint64_t divisor_count(std::uint64_t m) {
  if (m == 0) throw std::domain_error("divisor_count: m must be >= 1");
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p) continue;
    std::uint64_t e = 0;
    while (m % p == 0) { m /= p; ++e; }
    count *= e + 1;
  }
  if (m > 1) count *= 2;
  return count;
}

std::vector<std::uint32_t> divisor_count_table(std::uint32_t n) {
  std::vector<std::uint32_t> d(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = i; j <= n; j += i) ++d[j];
  return d;
}

std::vector<std::uint64_t> euler_phi_table(std::uint32_t n) {
  std::vector<std::uint64_t> phi(static_cast<std::size_t>(n) + 1);
  std::iota(phi.begin(), phi.end(), std::uint64_t{0});
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (phi[i] != i) continue;  // i composite once visited; untouched means prime
    for (std::uint64_t j = i; j <= n; j += i) phi[j] -= phi[j] / i;
  }
  return phi;
}

std::vector<std::uint64_t> pillai_table(std::uint32_t n) {
  auto phi = euler_phi_table(n);
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t d = 1; d <= n; ++d)
    for (std::uint64_t j = d; j <= n; j += d) p[j] += d * phi[j / d];
  return p;
}

namespace {

long double next_up(long double x) {
  return std::nextafter(x, std::numeric_limits<long double>::infinity());
}
long double next_down(long double x) {
  return std::nextafter(x, -std::numeric_limits<long double>::infinity());
}

}  // namespace

DivisorBoundParams divisor_bound_constant(const Rational& delta) {
  if (!delta.is_positive()) throw std::domain_error("divisor_bound_constant: delta must be positive");
  if (delta < Rational(1, 16))
    throw budget_error(
        "divisor_bound_constant: delta < 1/16 requires sieving primes up to "
        "e^(1/delta) > 8.8e6, cost grows as exp(1/delta); raise delta");

  const long double inv_delta = 1.0L / delta.to_double();
  const long double limit = std::exp(inv_delta);
  const auto primes = primes_up_to(static_cast<std::uint32_t>(limit) + 1);

  const long double delta_ld = static_cast<long double>(delta.to_double());
  long double c3 = 1.0L;
  std::vector<std::uint32_t> used;
  for (std::uint32_t p : primes) {
    if (static_cast<long double>(p) > limit) break;
    // factor 1/(delta*ln p), rounded up: ln p down, product up
    long double lnp = next_down(std::log(static_cast<long double>(p)));
    long double factor = next_up(1.0L / next_down(delta_ld * lnp));
    c3 = next_up(c3 * factor);
    used.push_back(p);
  }
  return DivisorBoundParams{delta, c3, std::move(used)};
}

bool divisor_bound_holds(std::uint64_t m, std::uint64_t d_m, const DivisorBoundParams& p) {
  const long double rhs =
      p.c3_upper * std::pow(static_cast<long double>(m), static_cast<long double>(p.delta.to_double()));
  return static_cast<long double>(d_m) < rhs;
}

}  // namespace apu
