#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "etacrit/rational.hpp"

using namespace etacrit;

TEST_CASE("rationals are canonical after construction and arithmetic") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  const Rational zero = make_rational(0, 7);
  CHECK(zero.get_num() == 0);
  CHECK(zero.get_den() == 1);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

  const Rational q = Rational(1, 6) + Rational(1, 3);
  CHECK(q.get_num() == 1);
  CHECK(q.get_den() == 2);
}

TEST_CASE("parse_rational accepts fractions, integers and exact decimals") {
  CHECK(parse_rational("7/3") == Rational(7, 3));
  CHECK(parse_rational(" -10/4 ") == Rational(-5, 2));
  CHECK(parse_rational("1000000") == Rational(1000000));
  CHECK(parse_rational("1e-8") == Rational(1, 100000000));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("2.5e3") == Rational(2500));
  CHECK(parse_rational("1E6") == Rational(1000000));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("3/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/2/3"));
}

TEST_CASE("floor and decimal rendering") {
  CHECK(floor_of(Rational(7, 3)) == 2);
  CHECK(floor_of(Rational(-7, 3)) == -3);
  CHECK(floor_int64(Rational(6)) == 6);
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(4, 15)) == "0.266666666666667");
  CHECK(to_string(Rational(4, 15)) == "4/15");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("balanced summation agrees with a left fold") {
  std::vector<Rational> terms;
  Rational fold = 0;
  for (long k = 1; k <= 300; ++k) {
    terms.emplace_back((k % 7) - 3, k * k + 1);
    terms.back().canonicalize();
    fold += terms.back();
  }
  CHECK(sum_balanced(terms) == fold);
  CHECK(sum_balanced({}) == 0);
}
