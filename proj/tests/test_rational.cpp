#include <doctest.h>

#include "apu/rng.hpp"

using namespace apu;

TEST_CASE("ratio_of normalizes to lowest terms") {
  CHECK(ratio_of(Rational(4, 6), Rational(1, 3)) == Rational(2));
  CHECK(ratio_of(Rational(4, 6), Rational(1, 3)).to_string() == "2/1");
  const Rational x(7, 5);
  CHECK(ratio_of(x, x) == Rational(1));
  CHECK(ratio_of(Rational(3, 2), Rational(9, 4)) == Rational(2, 3));
}

TEST_CASE("canonical form invariants") {
  const Rational r(-6, -8);
  CHECK(r.num() == 3);
  CHECK(r.den() == 4);
  const Rational neg(6, -8);
  CHECK(neg.num() == -3);
  CHECK(neg.den() == 4);
  CHECK(neg.sign() == -1);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("string round trips") {
  CHECK(Rational::from_string("3/2") == Rational(3, 2));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK(Rational(2, 3).to_string() == "2/3");
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational::from_string(Rational(22, 7).to_string()) == Rational(22, 7));
}

TEST_CASE("arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(5, 10) == Rational(1, 2));
  CHECK(Rational(7, 2).is_positive());
  CHECK(!Rational(0).is_positive());
  CHECK(Rational(8, 4).is_integer());
}

TEST_CASE("reciprocal product is one on random rationals") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a(int_from(1 + rng.below(1000)), int_from(1 + rng.below(60)));
    const Rational b(int_from(1 + rng.below(1000)), int_from(1 + rng.below(60)));
    CHECK(ratio_of(a, b) * ratio_of(b, a) == Rational(1));
  }
}
