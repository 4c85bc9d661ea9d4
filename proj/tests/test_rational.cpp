#include <random>
#include <sstream>

#include "doctest.h"
#include "relic/rational.hpp"

using relic::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(6, 3).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 2) == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  Rational acc(1, 6);
  acc += Rational(1, 3);
  CHECK(acc == Rational(1, 2));
  acc *= Rational(4);
  CHECK(acc == Rational(2));
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) <= Rational(1));
  CHECK(Rational(5, 3) > Rational(3, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("rational arithmetic identities on random values") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long long> num(-500, 500);
  std::uniform_int_distribution<long long> den(1, 40);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    CHECK(a + b - b == a);
    CHECK(a + b == b + a);
    if (b != Rational(0)) CHECK(a * b / b == a);
    CHECK(a - a == Rational(0));
    CHECK((a < b) == !(a >= b));
  }
}

TEST_CASE("rational printing") {
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(10, 2).str() == "5");
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(0).str() == "0");
  std::ostringstream os;
  os << Rational(11, 2);
  CHECK(os.str() == "11/2");
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("+4") == Rational(4));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));

  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("-"));
  CHECK(!Rational::parse("1.5"));
  CHECK(!Rational::parse("1e3"));
  CHECK(!Rational::parse("a"));
  CHECK(!Rational::parse("1/"));
  CHECK(!Rational::parse("/2"));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("1 2"));
}

TEST_CASE("rational parse/str round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 60);
  for (int i = 0; i < 200; ++i) {
    const Rational r(num(rng), den(rng));
    auto back = Rational::parse(r.str());
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
}
