#include <doctest.h>

#include <random>
#include <sstream>

#include "jumpnum/rational.hpp"

using jumpnum::Rational;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("6/7") == Rational(6, 7));
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("+3/9") == Rational(1, 3));
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a/b", "1.5", "1//2", "1/2/3", " 1/2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
  std::ostringstream os;
  os << Rational(-7, 10);
  CHECK(os.str() == "-7/10");
}

TEST_CASE("floor ceil frac on fixed values") {
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(7, 2).ceil() == Rational(4));
  CHECK(Rational(-7, 2).ceil() == Rational(-3));
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK(Rational(5).frac() == Rational(0));
  CHECK(Rational(30, 6).to_int64() == 5);
  CHECK_THROWS_AS(Rational(1, 2).to_int64(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("large values stay exact") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1'000'003);
  const Rational back = big / Rational(1'000'003) * Rational(1'000'003);
  CHECK(back == big);
  CHECK((big + Rational(1, 3)).frac() == Rational(1, 3));
  CHECK_THROWS_AS(big.to_int64(), std::domain_error);
}

TEST_CASE("property: floor(x) + frac(x) = x and 0 <= frac < 1") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> num(-500, 500), den(1, 60);
  for (int i = 0; i < 2000; ++i) {
    const Rational x(num(rng), den(rng));
    CAPTURE(x.str());
    CHECK(x.floor() + x.frac() == x);
    CHECK(x.frac() >= Rational(0));
    CHECK(x.frac() < Rational(1));
    CHECK(x.floor().is_integer());
    CHECK(x.ceil() - x.floor() == (x.is_integer() ? Rational(0) : Rational(1)));
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("property: ordering is consistent with subtraction") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 20);
  for (int i = 0; i < 1000; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a < b) == ((b - a).sign() > 0));
    CHECK((a == b) == (a - b).is_zero());
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
  }
}
