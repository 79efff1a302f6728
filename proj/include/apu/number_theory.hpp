#pragma once

#include <cstdint>
#include <vector>

#include "apu/rational.hpp"

namespace apu {

/// Thrown when an operation would exceed its configured time/memory budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// d(m) = number of divisors, by trial division. Rejects m = 0.
std::uint64_t divisor_count(std::uint64_t m);

/// d(1..n) by a multiples sieve.
std::vector<std::uint32_t> divisor_count_table(std::uint32_t n);

/// Euler phi(1..n) by a linear sieve; result[0] unused, result[k] = phi(k).
std::vector<std::uint64_t> euler_phi_table(std::uint32_t n);

/// Pillai function P(1..n), P(j) = sum_{i=1..j} gcd(i,j) = sum_{d|j} d*phi(j/d).
std::vector<std::uint64_t> pillai_table(std::uint32_t n);

/// Constant of the divisor bound d(m) < c3(delta) * m^delta, with
/// c3(delta) = prod_{p prime, p <= e^(1/delta)} 1/(delta * ln p).
struct DivisorBoundParams {
  Rational delta;
  long double c3_upper;   // strict upper rounding of c3 (64-bit mantissa)
  std::vector<std::uint32_t> primes;  // the primes entering the product
};

/// Requires delta >= 1/16: smaller delta needs a prime sieve up to
/// e^(1/delta), which grows past 10^27 already at delta = 1/64.
DivisorBoundParams divisor_bound_constant(const Rational& delta);

/// d(m) < c3 * m^delta, evaluated in long double with the upper-rounded c3.
bool divisor_bound_holds(std::uint64_t m, std::uint64_t d_m, const DivisorBoundParams& p);

}  // namespace apu
