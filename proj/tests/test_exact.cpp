#include <doctest.h>

#include "loadgame/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("decimal parsing is exact and base 10") {
  CHECK(q("0.91") == Rational(91, 100));
  CHECK(q("0.25") == Rational(1, 4));
  CHECK(q("-2.5") == Rational(-5, 2));
  CHECK(q("007") == Rational(7));
  CHECK(q("0.000000001") == Rational(1, 1'000'000'000));
  for (const char* bad : {"", ".5", "5.", "1e3", "abc", "1.2.3", "--1", " 1"}) {
    CHECK_THROWS_AS(parse_decimal(bad), DomainError);
  }
}

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(q("10.368")) == "10.368");
  CHECK(format_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(format_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(format_decimal(Rational(-1, 8)) == "-0.125");
  CHECK(format_decimal(Rational(0)) == "0");
  CHECK(format_fixed(q("2.00625"), 2) == "2.01");
  CHECK(format_fixed(q("2.005"), 2) == "2.01");
  CHECK(format_fixed(q("-2.005"), 2) == "-2.01");
  CHECK(format_fixed(Rational(10, 7), 2) == "1.43");
  CHECK(round_half_up(q("0.125"), 2) == q("0.13"));
}

TEST_CASE("format then parse returns the value for terminating decimals") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    Rational v(static_cast<long>(rng() % 2'000'001) - 1'000'000, 1);
    v /= Rational(static_cast<long>(1) << (rng() % 20));
    v.canonicalize();
    CHECK(parse_decimal(format_decimal(v, 30)) == v);
  }
}

TEST_CASE("energy works in whole milli-kWh") {
  CHECK(kwh("1.5").milli() == 1500);
  CHECK(kwh("0.001").milli() == 1);
  CHECK(kwh("2.5").to_string() == "2.5");
  CHECK(kwh("1.5").kwh() == Rational(3, 2));
  CHECK_THROWS_AS(kwh("0.0005"), DomainError);
  CHECK(sum(loads({"1", "2.5", "0.25"})) == kwh("3.75"));
  CHECK(kwh("2") * 3 == kwh("6"));
}

TEST_CASE("kwh values compare equal to reduced rationals") {
  CHECK(Energy::from_milli(500).kwh() == Rational(1, 2));
  CHECK(Energy::from_milli(500).kwh() + Rational(1, 2) == Rational(1));
}

TEST_CASE("money and price are separate units") {
  const Price p = Price::parse("30.25");
  CHECK(cost_of(p, kwh("3")) == eur("0.9075"));
  CHECK(eur("0.9075").display() == "0.91");
  CHECK(eur("1") / eur("4") == Rational(1, 4));
  CHECK(Money(Rational(2, 4)) == eur("0.5"));
  CHECK(eur("1") < eur("1.01"));
}
