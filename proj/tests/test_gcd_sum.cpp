#include <doctest.h>

#include "apu/gcd_sum.hpp"
#include "apu/number_theory.hpp"

using namespace apu;

TEST_CASE("pairwise gcd sums") {
  CHECK(gcd_sum({Int(1)}) == Rational(0));
  CHECK(gcd_sum({Int(1), Int(2), Int(3)}) == Rational(7, 6));
  CHECK(gcd_sum({Int(2), Int(4), Int(8)}) == Rational(5, 4));
  CHECK_THROWS_AS(gcd_sum({Int(3), Int(2)}), std::invalid_argument);
  CHECK_THROWS_AS(gcd_sum({Int(2), Int(2)}), std::invalid_argument);
  CHECK_THROWS_AS(gcd_sum({Int(0), Int(2)}), std::invalid_argument);
}

TEST_CASE("Pillai fast path equals the double sum") {
  CHECK(gcd_sum_fast_range(3) == Rational(7, 6));
  for (std::uint32_t n = 1; n <= 120; ++n) {
    std::vector<Int> v;
    for (std::uint32_t i = 1; i <= n; ++i) v.push_back(int_from(i));
    CHECK(gcd_sum_fast_range(n) == gcd_sum(v));
  }
}

TEST_CASE("growth scan") {
  const auto one = gcd_sum_growth_scan({10});
  CHECK(one.rows.size() == 1);
  CHECK(one.rows[0].value == gcd_sum_fast_range(10));
  CHECK_THROWS_AS(gcd_sum_growth_scan({10, 10}), std::invalid_argument);
  const auto scan = gcd_sum_growth_scan({16, 32, 64, 128});
  for (std::size_t i = 0; i + 1 < scan.rows.size(); ++i)
    CHECK(scan.rows[i].value < scan.rows[i + 1].value);
  CHECK(scan.within_band);
}

TEST_CASE("graham quotients") {
  std::vector<Int> range;
  for (int i = 1; i <= 12; ++i) range.push_back(Int(i));
  const auto g = graham_quotient(range);
  CHECK(g.max_quotient == 12);
  CHECK(g.ge_n);
  CHECK(graham_quotient({Int(7), Int(14)}).max_quotient == 2);
  CHECK(graham_quotient({Int(2), Int(3), Int(5)}).max_quotient == 5);
  CHECK_THROWS_AS(graham_quotient({Int(4)}), std::invalid_argument);
}
