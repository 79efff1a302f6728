#include <doctest.h>

#include <set>

#include "apu/oracles.hpp"
#include "apu/progression.hpp"
#include "apu/rng.hpp"

using namespace apu;

TEST_CASE("elements enumeration") {
  const ArithmeticProgression p(Rational(0), Rational(2), 5);
  CHECK(p.elements() == (std::vector<Rational>{Rational(0), Rational(2), Rational(4),
                                               Rational(6), Rational(8)}));
  const ArithmeticProgression q(Rational(1, 2), Rational(1, 3), 3);
  CHECK(q.elements() ==
        (std::vector<Rational>{Rational(1, 2), Rational(5, 6), Rational(7, 6)}));
  CHECK(ArithmeticProgression(Rational(-3), Rational(5), 1).elements() ==
        std::vector<Rational>{Rational(-3)});
  CHECK(q.contains(Rational(5, 6)));
  CHECK(!q.contains(Rational(2, 3)));
}

TEST_CASE("AP validation") {
  CHECK_THROWS_AS(ArithmeticProgression(Rational(0), Rational(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(ArithmeticProgression(Rational(0), Rational(-1), 3), std::invalid_argument);
  CHECK_THROWS_AS(ArithmeticProgression(Rational(0), Rational(1), 0), std::invalid_argument);
}

TEST_CASE("intersection examples") {
  const auto common = intersect(ArithmeticProgression(Rational(0), Rational(2), 5),
                                ArithmeticProgression(Rational(0), Rational(3), 4));
  REQUIRE(common.has_value());
  CHECK(common->elements() == (std::vector<Rational>{Rational(0), Rational(6)}));
  CHECK(common->diff() == Rational(6));  // lcm(2,3)

  const ArithmeticProgression p(Rational(1, 2), Rational(3, 7), 9);
  const auto self = intersect(p, p);
  REQUIRE(self.has_value());
  CHECK(self->elements() == p.elements());

  CHECK(!intersect(ArithmeticProgression(Rational(0), Rational(2), 3),
                   ArithmeticProgression(Rational(1), Rational(2), 3)));
}

TEST_CASE("intersection equals the element-set oracle on random rational pairs") {
  Rng rng(5);
  int nonempty = 0;
  for (int it = 0; it < 400; ++it) {
    const Rational s1(Int(rng.range(-20, 20)), int_from(1 + rng.below(8)));
    const Rational d1(int_from(1 + rng.below(10)), int_from(1 + rng.below(8)));
    const std::uint64_t l1 = 1 + rng.below(30), l2 = 1 + rng.below(30);
    const ArithmeticProgression p1(s1, d1, l1);
    const Rational d2(int_from(1 + rng.below(10)), int_from(1 + rng.below(8)));
    // anchor half of the draws through a shared point
    const Rational s2 = it % 2 == 0
                            ? p1.element(rng.below(l1)) - Rational(int_from(rng.below(l2))) * d2
                            : Rational(Int(rng.range(-20, 20)), int_from(1 + rng.below(8)));
    const ArithmeticProgression p2(s2, d2, l2);
    const auto got = intersect(p1, p2);
    const auto expected = oracles::intersect_elements(p1, p2);
    if (!expected.empty()) ++nonempty;
    CHECK((got ? got->elements() : std::vector<Rational>{}) == expected);
  }
  CHECK(nonempty > 100);  // the generator actually exercises overlaps
}

TEST_CASE("intersection size bound (stated form, slack included)") {
  const auto r1 = intersection_size_bound_check(ArithmeticProgression(Rational(0), Rational(2), 6),
                                                ArithmeticProgression(Rational(0), Rational(3), 6));
  CHECK(r1.bound == Rational(3));
  CHECK(r1.size == 2);
  CHECK(r1.holds);
  const auto r2 = intersection_size_bound_check(ArithmeticProgression(Rational(0), Rational(2), 6),
                                                ArithmeticProgression(Rational(4), Rational(2), 6));
  CHECK(r2.bound == Rational(7));
  CHECK(r2.holds);
  CHECK_THROWS_AS(
      intersection_size_bound_check(ArithmeticProgression(Rational(0), Rational(1, 2), 4),
                                    ArithmeticProgression(Rational(0), Rational(3), 4)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      intersection_size_bound_check(ArithmeticProgression(Rational(0), Rational(2), 4),
                                    ArithmeticProgression(Rational(0), Rational(3), 5)),
      std::invalid_argument);
}

TEST_CASE("difference-ratio lemma checks") {
  const auto ex1 = difference_ratio_check(ArithmeticProgression(Rational(0), Rational(2), 5),
                                            ArithmeticProgression(Rational(0), Rational(3), 5));
  CHECK(ex1.r == 2);
  CHECK(ex1.ratio_bound == 4);
  CHECK(ex1.diff_ratio == Rational(2, 3));
  CHECK(ex1.holds);
  const auto ex2 = difference_ratio_check(ArithmeticProgression(Rational(0), Rational(1), 7),
                                            ArithmeticProgression(Rational(0), Rational(2), 7));
  CHECK(ex2.r == 4);
  CHECK(ex2.ratio_bound == 2);
  CHECK(ex2.holds);
  const auto vac = difference_ratio_check(ArithmeticProgression(Rational(0), Rational(5), 3),
                                            ArithmeticProgression(Rational(1), Rational(9), 3));
  CHECK(vac.vacuous);
  CHECK(vac.holds);
}

TEST_CASE("family validation and union census") {
  CHECK_THROWS_AS(APFamily({ArithmeticProgression(Rational(0), Rational(2), 3),
                            ArithmeticProgression(Rational(5), Rational(2), 3)}),
                  std::invalid_argument);

  const APFamily solo({ArithmeticProgression(Rational(2), Rational(3), 4)});
  const auto c1 = union_census(solo);
  CHECK(c1.cardinality == 4);
  CHECK(c1.multiplicity_histogram.at(1) == 4);

  const APFamily pair({ArithmeticProgression(Rational(0), Rational(1), 3),
                       ArithmeticProgression(Rational(0), Rational(2), 3)});
  const auto c2 = union_census(pair);
  CHECK(c2.cardinality == 4);
  CHECK(c2.alpha_sum == 6);
  CHECK(c2.multiplicity_histogram.at(2) == 2);  // 0 and 2 are shared
  CHECK(w_count_family(pair) == 2);
  CHECK(dawson_sankoff_bound(pair) == Rational(36, 10));
}

TEST_CASE("histogram identity on random families") {
  Rng rng(13);
  for (int it = 0; it < 120; ++it) {
    std::vector<ArithmeticProgression> aps;
    std::set<std::uint64_t> diffs;
    while (diffs.size() < 2 + rng.below(6)) diffs.insert(1 + rng.below(20));
    for (auto d : diffs)
      aps.emplace_back(Rational(int_from(rng.below(30))), Rational(int_from(d)),
                       1 + rng.below(12));
    const APFamily fam(std::move(aps));
    const auto census = union_census(fam);
    CHECK(census.alpha_sum == fam.total_length());
    std::uint64_t w_from_hist = 0;
    for (const auto& [alpha, cnt] : census.multiplicity_histogram)
      w_from_hist += cnt * (alpha * (alpha - 1) / 2);
    CHECK(w_count_family(fam) == w_from_hist);
    CHECK(Rational(int_from(census.cardinality)) >= dawson_sankoff_bound(fam));
  }
}

TEST_CASE("gcd-sum union bound") {
  const APFamily pair({ArithmeticProgression(Rational(0), Rational(1), 3),
                       ArithmeticProgression(Rational(0), Rational(2), 3)});
  const auto rep = gcdsum_union_bound_check(pair);
  CHECK(rep.union_size == 4);
  CHECK(rep.bound == Rational(36, 13));  // 36/(6 + 4 + 2*3*(1/2))
  CHECK(rep.holds);
  CHECK_THROWS_AS(
      gcdsum_union_bound_check(APFamily({ArithmeticProgression(Rational(0), Rational(1, 2), 3),
                                           ArithmeticProgression(Rational(0), Rational(2), 3)})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      gcdsum_union_bound_check(APFamily({ArithmeticProgression(Rational(0), Rational(1), 3),
                                           ArithmeticProgression(Rational(0), Rational(2), 4)})),
      std::invalid_argument);
}
