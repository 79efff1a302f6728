#include "apu/gcd_sum.hpp"

#include <cmath>

#include "apu/number_theory.hpp"

namespace apu {

namespace {

void validate_increasing_positive(const std::vector<Int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw std::invalid_argument("gcd list: entries must be positive");
    if (i > 0 && a[i] <= a[i - 1])
      throw std::invalid_argument("gcd list: entries must be strictly increasing");
  }
}

}  // namespace

Rational gcd_sum(const std::vector<Int>& a) {
  validate_increasing_positive(a);
  Rational total(0);
  Int g;
  for (std::size_t j = 1; j < a.size(); ++j) {
    Int inner = 0;
    for (std::size_t i = 0; i < j; ++i) {
      mpz_gcd(g.get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
      inner += g;
    }
    total += Rational(inner, a[j]);
  }
  return total;
}

Rational gcd_sum_fast_range(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("gcd_sum_fast_range: n must be >= 1");
  const auto pillai = pillai_table(n);

  Int common = 1;  // lcm(1..n) as product of maximal prime powers <= n
  for (std::uint32_t p : primes_up_to(n)) {
    std::uint64_t pk = p;
    while (pk <= n / p) pk *= p;
    common *= int_from(pk);
  }

  Int numer = 0, term;
  for (std::uint64_t j = 2; j <= n; ++j) {
    mpz_divexact_ui(term.get_mpz_t(), common.get_mpz_t(), j);
    numer += term * int_from(pillai[j] - j);
  }
  return Rational(numer, common);
}

GrowthScanReport gcd_sum_growth_scan(const std::vector<std::uint32_t>& ns) {
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw std::invalid_argument("gcd_sum_growth_scan: n_list must be sorted");
  GrowthScanReport rep;
  for (std::uint32_t n : ns) {
    GrowthScanRow row;
    row.n = n;
    row.value = gcd_sum_fast_range(n);
    row.normalized = n >= 2 ? row.value.to_double() / (n * std::log(static_cast<double>(n))) : 0.0;
    rep.rows.push_back(std::move(row));
  }
  bool first = true;
  for (const auto& row : rep.rows) {
    if (row.n < 2) continue;
    if (first) { rep.ratio_min = rep.ratio_max = row.normalized; first = false; }
    rep.ratio_min = std::min(rep.ratio_min, row.normalized);
    rep.ratio_max = std::max(rep.ratio_max, row.normalized);
  }
  rep.within_band = !first && rep.ratio_min > 0 && rep.ratio_max <= 3.0 * rep.ratio_min;
  return rep;
}

GrahamReport graham_quotient(const std::vector<Int>& a) {
  validate_increasing_positive(a);
  if (a.size() < 2) throw std::invalid_argument("graham_quotient: need at least two entries");
  GrahamReport rep;
  rep.max_quotient = 0;
  Int g, q;
  for (std::size_t j = 1; j < a.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      mpz_gcd(g.get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
      mpz_divexact(q.get_mpz_t(), a[j].get_mpz_t(), g.get_mpz_t());
      if (q > rep.max_quotient) {
        rep.max_quotient = q;
        rep.witness_i = a[i];
        rep.witness_j = a[j];
      }
    }
  const double n = static_cast<double>(a.size());
  rep.ge_n = rep.max_quotient >= int_from(a.size());
  rep.averaging_shape = std::pow(n, 0.75) / 2.0;
  return rep;
}

}  // namespace apu
