#include <doctest.h>

#include "apu/oracles.hpp"
#include "apu/ratio_census.hpp"
#include "apu/rng.hpp"

using namespace apu;

namespace {
FiniteSet ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return FiniteSet(std::move(out));
}
}  // namespace

TEST_CASE("rd_members enumerates lowest-term ratios") {
  CHECK(rd_members(1).values() == std::vector<Rational>{Rational(1)});
  CHECK(rd_members(2).values() ==
        (std::vector<Rational>{Rational(1, 2), Rational(1), Rational(2)}));
  CHECK(rd_members(3).size() == 7);
  CHECK(rd_members(3).size() == rd_size(3));
  CHECK(rd_members(10).size() == rd_size(10));
}

TEST_CASE("in_rd membership") {
  CHECK(in_rd(Rational(4, 6), 3));
  CHECK(!in_rd(Rational(2, 3), 2));
  CHECK(in_rd(Rational(7, 7), 1));
  CHECK(!in_rd(Rational(0), 3));
}

TEST_CASE("g_census examples") {
  CHECK(g_census(ints({1, 2, 3}), 2) == 1);
  CHECK(g_census(ints({1, 2}), 1) == 0);
  CHECK(g_census(ints({1, 2, 3}), 3) == 3);
}

TEST_CASE("cycle_census examples and input validation") {
  CHECK(cycle_census(ints({1, 2, 4, 8}), 2, 4) == 0);
  CHECK(cycle_census(ints({1, 2, 3, 6}), 3, 4) == 8);
  CHECK(cycle_census(ints({1, 2, 3}), 3, 4) == 0);
  CHECK_THROWS_AS(cycle_census(ints({1, 2, 3, 6}), 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(cycle_census(ints({1, 2, 3, 6}), 3, 2), std::invalid_argument);
}

TEST_CASE("cycle_census equals the permutation filter on random sets") {
  Rng rng(23);
  for (int it = 0; it < 60; ++it) {
    std::vector<std::uint32_t> pool;
    std::vector<Rational> vals;
    while (pool.size() < 4 + rng.below(4)) {
      const std::uint32_t v = 1 + static_cast<std::uint32_t>(rng.below(12));
      if (std::find(pool.begin(), pool.end(), v) == pool.end()) {
        pool.push_back(v);
        vals.emplace_back(int_from(v));
      }
    }
    const FiniteSet b(std::move(vals));
    for (int d = 1; d <= 4; ++d)
      for (int two_k : {4, 6}) {
        const auto fast = cycle_census(b, d, two_k);
        CHECK(fast == oracles::cycle_tuples_filter(b, d, two_k));
        if (fast != 0) CHECK(fast % (2 * two_k) == 0);
      }
  }
}

TEST_CASE("complete ratio graph: every arrangement of all eight closes") {
  CHECK(cycle_census(FiniteSet::integers(8), 8, 8) == 40320);  // 8!
  const FiniteSet smooth =
      FiniteSet::collect({Rational(1), Rational(2), Rational(3), Rational(4), Rational(6),
                          Rational(8), Rational(12), Rational(24)});
  for (int tk : {4, 6, 8})
    CHECK(cycle_census(smooth, 3, tk) == oracles::cycle_tuples_filter(smooth, 3, tk));
}

TEST_CASE("cycle_census equals the rational permutation filter") {
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    std::vector<Rational> vals;
    for (std::uint64_t i = 0; i < 4 + rng.below(4); ++i)
      vals.emplace_back(int_from(1 + rng.below(12)), int_from(1 + rng.below(4)));
    const FiniteSet b = FiniteSet::collect(std::move(vals));
    for (int d = 1; d <= 4; ++d)
      CHECK(cycle_census(b, d, 4) == oracles::cycle_tuples_filter(b, d, 4));
  }
}

TEST_CASE("basic lower check") {
  CHECK(basic_lower_check(ints({1, 2, 3, 6}), 3, 2).holds);
  CHECK(basic_lower_check(ints({5}), 3, 2).holds);
  CHECK_THROWS_AS(basic_lower_check(ints({1, 2}), 3, 1), std::invalid_argument);
}

TEST_CASE("subsample expectation: degenerate p") {
  const auto full = subsample_expectation_check(ints({1, 2, 3, 6}), 3, 2, Rational(1), 50, 9);
  CHECK(full.pass);
  CHECK(full.mean_g == static_cast<double>(full.exact_g));
  CHECK(full.mean_c == static_cast<double>(full.exact_c));
  CHECK(full.se_g == 0);
  const auto tiny = subsample_expectation_check(ints({1, 2, 3, 6}), 3, 2, Rational(1, 64), 100, 9);
  CHECK(tiny.predicted_c < 1e-3);  // p^(2k) collapses the prediction
  CHECK_THROWS_AS(subsample_expectation_check(ints({1, 2}), 2, 2, Rational(2), 10, 1),
                  std::domain_error);
  CHECK_THROWS_AS(subsample_expectation_check(ints({1, 2}), 2, 2, Rational(0), 10, 1),
                  std::domain_error);
}

TEST_CASE("product representation DP") {
  CHECK(product_rep_audit(2, 2).sum_squares == 6);
  CHECK(product_rep_audit(1, 7).sum_squares == 1);
  CHECK(product_rep_audit(3, 2).sum_squares == 15);
  CHECK(product_rep_audit(3, 2).holds);
  CHECK_THROWS_AS(product_rep_audit(10, 10, 1000), budget_error);
}

TEST_CASE("f_count examples") {
  const FiniteSet a = ints({2, 4});
  const FiniteSet b = ints({1, 2});
  CHECK(f_count(a, b, 2) == 3);
  CHECK(f_count(ints({4, 8, 16, 32}), ints({2, 4, 8, 16}), 4) == 10);
  // d large enough and all ratios integral: the full product
  CHECK(f_count(ints({2, 4, 6}), ints({1, 2}), 6) == 6);
}

TEST_CASE("reciprocal transform") {
  const FiniteSet s = ints({1, 2});
  CHECK(reciprocal_transform(s).values() ==
        (std::vector<Rational>{Rational(1, 2), Rational(1)}));
  CHECK(reciprocal_transform(reciprocal_transform(s)).values() == s.values());
  CHECK(f_count(reciprocal_transform(ints({1, 2})), reciprocal_transform(ints({2, 4})), 2) == 3);
}

TEST_CASE("w triple count and chain") {
  CHECK(w_triple_count(ints({2, 4}), ints({1, 2}), 2) == 1);
  CHECK(w_triple_count(ints({2, 4}), ints({1}), 2) == 0);
  CHECK(w_triple_count(ints({6}), ints({1, 2, 3, 6}), 6) == 6);

  Rng rng(31);
  for (int it = 0; it < 60; ++it) {
    std::vector<Rational> av, bv;
    for (std::uint64_t i = 0; i < 1 + rng.below(8); ++i)
      av.emplace_back(int_from(1 + rng.below(24)), int_from(1 + rng.below(5)));
    for (std::uint64_t i = 0; i < 1 + rng.below(8); ++i)
      bv.emplace_back(int_from(1 + rng.below(24)), int_from(1 + rng.below(5)));
    const FiniteSet a = FiniteSet::collect(std::move(av));
    const FiniteSet b = FiniteSet::collect(std::move(bv));
    const int d = static_cast<int>(1 + rng.below(7));
    CHECK(w_triple_count(a, b, d) == oracles::w_triples_filter(a, b, d));
    CHECK(w_chain_check(a, b, d).holds);
  }
}
