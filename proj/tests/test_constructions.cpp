#include <doctest.h>

#include "apu/constructions.hpp"
#include "apu/oracles.hpp"
#include "apu/search.hpp"

using namespace apu;

TEST_CASE("multiplication table family") {
  const auto one = mult_table_family(1);
  CHECK(one.size() == 1);
  CHECK(one[0].elements() == std::vector<Rational>{Rational(1)});
  CHECK(union_census(mult_table_family(3)).cardinality == 6);
  CHECK(union_census(mult_table_family(4)).cardinality == 9);
  CHECK(w_count_family(mult_table_family(3)) == 3);
}

TEST_CASE("multiplication table cardinality") {
  CHECK(mult_table_card(1) == 1);
  CHECK(mult_table_card(2) == 3);
  CHECK(mult_table_card(4) == 9);
  for (std::uint64_t n = 1; n <= 32; ++n)
    CHECK(mult_table_card(n) == oracles::mult_table_card_setbased(n));
  CHECK_THROWS_AS(mult_table_card(100000, 1 << 20), budget_error);
}

TEST_CASE("tightness construction") {
  const auto ex = tightness_sets(4, 4, 4);
  CHECK(ex.k == 2);
  CHECK(ex.l == 2);
  CHECK(ex.t == 2);
  CHECK(ex.a.values() == (std::vector<Rational>{Rational(4), Rational(8), Rational(16), Rational(32)}));
  CHECK(ex.b.values() == (std::vector<Rational>{Rational(2), Rational(4), Rational(8), Rational(16)}));
  CHECK(ex.f == 10);
  CHECK(ex.verified);

  const auto ex2 = tightness_sets(9, 4, 4);
  CHECK(ex2.k == 3);
  CHECK(ex2.l == 1);
  CHECK(ex2.t == 3);
  CHECK(ex2.f >= 9);
  CHECK(ex2.verified);

  const auto tiny = tightness_sets(1, 1, 1);
  CHECK(tiny.product == 1);
  CHECK(tiny.verified);

  const auto bad = tightness_sets(20, 1, 1);  // m > 4nd
  CHECK(!bad.hypotheses_hold);
  CHECK(!bad.verified);
  CHECK(!bad.note.empty());

  const auto degenerate = tightness_sets(4, 1, 1);  // l = 0, certificate not applicable
  CHECK(degenerate.hypotheses_hold);
  CHECK(!degenerate.bound_applicable);
}

TEST_CASE("exact-regime constructions") {
  const auto c2 = exact_regime_sets(2, 2, 4, 2);
  CHECK(c2.a.values() == (std::vector<Rational>{Rational(3), Rational(9)}));
  CHECK(c2.b.size() == 4);
  CHECK(c2.b.contains(Rational(3, 2)));
  CHECK(c2.f == 4);
  CHECK(c2.verified);

  const auto c3 = exact_regime_sets(3, 2, 2, 1);
  CHECK(c3.f == 2);
  CHECK(c3.verified);

  const auto c1 = exact_regime_sets(1, 2, 2, 4);
  CHECK(c1.f == 4);
  CHECK(c1.verified);

  CHECK_THROWS_AS(exact_regime_sets(1, 3, 3, 4), std::invalid_argument);   // d < mn
  CHECK_THROWS_AS(exact_regime_sets(2, 3, 4, 2), std::invalid_argument);   // n < md
  CHECK_THROWS_AS(exact_regime_sets(3, 4, 3, 2), std::invalid_argument);   // m < nd
  CHECK_THROWS_AS(exact_regime_sets(4, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("sidon sets") {
  CHECK(sidon_set(1) == std::vector<std::uint64_t>{1});
  CHECK(sidon_set(3) == (std::vector<std::uint64_t>{1, 2, 4}));
  CHECK(sidon_set(5) == (std::vector<std::uint64_t>{1, 2, 4, 8, 13}));
  CHECK(oracles::is_sidon(sidon_set(60)));
}

TEST_CASE("two-term witnesses") {
  CHECK(u2_witness(1).union_size == 2);
  CHECK(u2_witness(3).union_size == 3);
  CHECK(u2_witness(7).union_size == 5);
  const auto w = u2_witness(10);
  CHECK(w.m_star == 5);
  CHECK(w.pairs_below == 6);
  CHECK(w.pairs_at == 10);
  const APFamily fam = u2_witness_family(w);
  CHECK(fam.size() == 10);
  CHECK(union_census(fam).cardinality == 5);
}

TEST_CASE("three-term reduction families") {
  const auto tiny = ruzsa_triple_family({0, 1});
  CHECK(tiny.chosen.size() == 1);
  CHECK(ruzsa_family(tiny)[0].elements() ==
        (std::vector<Rational>{Rational(0), Rational(1), Rational(2)}));

  const auto three = ruzsa_triple_family({0, 1, 3});
  CHECK(three.positive_differences == 3);
  CHECK(three.diffs_distinct);
  CHECK(three.union_contained);

  std::vector<long long> interval;
  for (long long i = 1; i <= 12; ++i) interval.push_back(i);
  const auto full = ruzsa_triple_family(interval);
  CHECK(full.positive_differences == 11);
  CHECK(full.union_contained);
  CHECK_THROWS_AS(ruzsa_triple_family({5}), std::invalid_argument);
}
