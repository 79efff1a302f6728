#include <doctest.h>

#include <numeric>

#include "apu/number_theory.hpp"
#include "apu/oracles.hpp"
#include "apu/rng.hpp"

using namespace apu;

TEST_CASE("divisor_count basics") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(1ull << 10) == 11);
  CHECK_THROWS_AS(divisor_count(0), std::domain_error);
}

TEST_CASE("divisor_count agrees with the slow oracle and is multiplicative") {
  Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    const std::uint64_t m = 1 + rng.below(3000);
    CHECK(divisor_count(m) == oracles::divisor_count_slow(m));
  }
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = 1 + rng.below(500);
    const std::uint64_t b = 1 + rng.below(500);
    if (std::gcd(a, b) != 1) continue;
    CHECK(divisor_count(a * b) == divisor_count(a) * divisor_count(b));
  }
}

TEST_CASE("euler phi table") {
  CHECK(euler_phi_table(1) == std::vector<std::uint64_t>{0, 1});
  const auto phi = euler_phi_table(30);
  CHECK(phi[1] == 1);
  CHECK(phi[6] == 2);
  CHECK(phi[30] == 8);
  std::uint64_t acc = 0;
  for (int q = 1; q <= 3; ++q) acc += phi[q];
  CHECK(2 * acc - 1 == 7);  // |R_3|
}

TEST_CASE("pillai table convolution") {
  const auto p = pillai_table(12);
  CHECK(p[6] == 15);  // 1+2+3+2+1+6
  for (std::uint32_t j = 1; j <= 12; ++j) {
    std::uint64_t direct = 0;
    for (std::uint32_t i = 1; i <= j; ++i) direct += std::gcd(i, j);
    CHECK(p[j] == direct);
  }
}

TEST_CASE("divisor bound constant") {
  const auto one = divisor_bound_constant(Rational(1));
  CHECK(one.primes == std::vector<std::uint32_t>{2});
  CHECK(static_cast<double>(one.c3_upper) == doctest::Approx(1.4427).epsilon(1e-3));

  const auto half = divisor_bound_constant(Rational(1, 2));
  CHECK(half.primes == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(static_cast<double>(half.c3_upper) == doctest::Approx(6.7114).epsilon(1e-3));

  CHECK_THROWS_AS(divisor_bound_constant(Rational(1, 64)), budget_error);
  CHECK_THROWS_AS(divisor_bound_constant(Rational(0)), std::domain_error);
}

TEST_CASE("divisor bound holds at desk scale") {
  const auto table = divisor_count_table(20000);
  for (const auto& delta : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
    const auto params = divisor_bound_constant(delta);
    for (std::uint64_t m = 1; m <= 20000; ++m) CHECK(divisor_bound_holds(m, table[m], params));
  }
}
