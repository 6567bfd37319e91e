#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stromver/scalar.hpp"

using stromver::GaussRational;
using stromver::Rational;

namespace {

GaussRational random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("addition basics") {
  GaussRational half(1, 2);
  CHECK(half + half == GaussRational(1));
  GaussRational x(Rational(3, 7), Rational(-2, 5));
  CHECK(x + GaussRational(0) == x);
  GaussRational a(Rational(1, 3), Rational(1, 6));
  GaussRational b(Rational(1, 6), Rational(1, 3));
  CHECK(a + b == GaussRational(Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("multiplication, inverse, conjugate") {
  GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  CHECK(GaussRational(2).inv() == GaussRational(1, 2));
  GaussRational one_plus_i(Rational(1), Rational(1));
  GaussRational one_minus_i(Rational(1), Rational(-1));
  CHECK(one_plus_i * one_minus_i == GaussRational(2));
  CHECK(i.conj() == -i);
  CHECK_THROWS_AS(GaussRational(0).inv(), stromver::DivisionByZero);
}

TEST_CASE("string round-trip") {
  const char* cases[] = {"0",       "1",          "-1",       "i",
                         "-i",      "2i",         "1/2",      "1/2-3/4i",
                         "-5/3+7i", "1+i",        "-2/9-1/9i"};
  for (const char* s : cases) {
    GaussRational v = GaussRational::parse(s);
    CHECK(GaussRational::parse(v.str()) == v);
    CHECK(v.str() == s);
  }
  CHECK(GaussRational::parse("3/6") == GaussRational(1, 2));
  CHECK_THROWS_AS(GaussRational::parse(""), stromver::ParseError);
  CHECK_THROWS_AS(GaussRational::parse("1/0"), stromver::ParseError);
  CHECK_THROWS_AS(GaussRational::parse("1+2"), stromver::ParseError);
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 1000; ++iter) {
    GaussRational a = random_scalar(rng);
    GaussRational b = random_scalar(rng);
    GaussRational c = random_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a.inv() * a == GaussRational(1));
    CHECK(GaussRational::parse(a.str()) == a);
  }
}
