#include <doctest.h>

#include "apu/constructions.hpp"
#include "apu/search.hpp"

using namespace apu;

TEST_CASE("u2 closed form") {
  CHECK(u2_exact(1).value == 2);
  CHECK(u2_exact(3).value == 3);
  CHECK(u2_exact(10).value == 5);
  const auto c = u2_exact(7);
  CHECK(c.value == 5);
  CHECK(c.pairs_below == 6);
  CHECK(c.pairs_at == 10);
}

TEST_CASE("box-exact search on the worked examples") {
  CHECK(u_exact_in_box(2, 2, SearchBox{4, 4}).min_cardinality == 3);
  CHECK(u_exact_in_box(2, 3, SearchBox{6, 4}).min_cardinality == 4);
  CHECK(u_exact_in_box(1, 7, SearchBox{3, 2}).min_cardinality == 7);
  CHECK(u_exact_in_box(3, 1, SearchBox{4, 3}).min_cardinality == 1);
  CHECK_THROWS_AS(u_exact_in_box(5, 2, SearchBox{4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(u_exact_in_box(6, 2, SearchBox{12, 12}, 10), budget_error);
}

TEST_CASE("box minimum at n=10 is 6, not the closed form 5") {
  // Five points would need all ten differences {1..10} distinct; the gap
  // parity 4(g1+g4)+6(g2+g3) = 55 with diameter 10 is unsolvable, so the
  // prescribed 2*u2(n) box is too small here (box(11,11) reaches 5).
  CHECK(u_exact_in_box(10, 2, SearchBox{10, 10}).min_cardinality == 6);
  CHECK(u_exact_in_box(10, 2, SearchBox{11, 11}).min_cardinality == 5);
}

TEST_CASE("witness families are valid and match the reported minimum") {
  for (std::uint32_t n : {2u, 5u, 8u}) {
    const auto v = u2_exact(n).value;
    const auto r = u_exact_in_box(n, 2, SearchBox{static_cast<std::uint32_t>(2 * v),
                                                  static_cast<std::uint32_t>(2 * v)});
    const APFamily fam = box_witness_family(r, 2);
    CHECK(fam.size() == n);
    CHECK(union_census(fam).cardinality == r.min_cardinality);
  }
}

TEST_CASE("heuristic upper bounds") {
  const auto h = u_upper_heuristic(2, 2, 2000, 99);
  CHECK(h.cardinality == 3);
  const auto h88 = u_upper_heuristic(8, 8, 3000, 99);
  CHECK(h88.cardinality <= mult_table_card(8));
  CHECK(heuristic_family(h88, 8).size() == 8);
  const SearchBox box{6, 5};
  for (int s = 0; s < 4; ++s) {
    const auto exact = u_exact_in_box(3, 3, box).min_cardinality;
    CHECK(u_upper_heuristic(3, 3, 1500, 1000 + s, box).cardinality >= exact);
  }
}

TEST_CASE("piecewise bound regimes") {
  const BoundConstants c;
  auto r1 = piecewise_bound(16, 2, c);
  CHECK(r1.regime == 1);
  CHECK(r1.value == doctest::Approx(4.0));
  auto r3 = piecewise_bound(16, 16, c);
  CHECK(r3.regime == 3);
  CHECK(r3.value == doctest::Approx(128.0));
  auto r2 = piecewise_bound(16, 4, c);
  CHECK(r2.regime == 2);
  CHECK(r2.value == doctest::Approx(16.0));
  CHECK(r2.non_rigorous);
  BoundConstants bad;
  bad.epsilon = Rational(3, 2);
  CHECK_THROWS_AS(piecewise_bound(16, 4, bad), std::domain_error);
  CHECK_THROWS_AS(piecewise_bound(1, 4, c), std::invalid_argument);
}

TEST_CASE("convexity union bound") {
  const APFamily pair({ArithmeticProgression(Rational(0), Rational(1), 3),
                       ArithmeticProgression(Rational(0), Rational(2), 3)});
  const auto rep = convexity_bound_audit(pair, Rational(1, 4));
  CHECK(rep.w == 2);
  CHECK(rep.bound == Rational(36, 10));
  CHECK(rep.holds);
  CHECK(convexity_bound_audit(mult_table_family(4), Rational(1, 4)).holds);
  CHECK_THROWS_AS(
      convexity_bound_audit(APFamily({ArithmeticProgression(Rational(0), Rational(1), 3),
                                   ArithmeticProgression(Rational(0), Rational(2), 4)}),
                         Rational(1, 4)),
      std::invalid_argument);
}
