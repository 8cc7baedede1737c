#include <gtest/gtest.h>

#include "crnreal/error.hpp"
#include "crnreal/rational.hpp"
#include "fixtures.hpp"

using crnreal::Error;
using crnreal::parse_rational;
using crnreal::primitive_integer;
using crnreal::Rational;
using crnreal::RatVector;
using crnreal::operator+;
using crnreal::operator-;
using crnreal::operator*;

TEST(ParseRational, IntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational(" +4/6 "), Rational(2, 3));
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
}

TEST(ParseRational, StoresLowestTerms) {
  const Rational q = parse_rational("12/18");
  EXPECT_EQ(q.get_num(), 2);
  EXPECT_EQ(q.get_den(), 3);
}

TEST(ParseRational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational("1/"), Error);
  EXPECT_THROW(parse_rational("--1"), Error);
  EXPECT_THROW(parse_rational("2/-3"), Error);
}

TEST(ParseRational, HandlesLargeValues) {
  const Rational q = parse_rational("123456789012345678901234567890/3");
  EXPECT_EQ(crnreal::to_string(q), "41152263004115226300411522630");
}

TEST(ToString, Formats) {
  EXPECT_EQ(crnreal::to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(crnreal::to_string(RatVector{1, Rational(1, 2), 0}), "(1,1/2,0)");
  EXPECT_EQ(crnreal::to_string(RatVector{}), "()");
}

TEST(PrimitiveInteger, ClearsDenominatorsAndCommonFactors) {
  EXPECT_EQ(primitive_integer({Rational(1, 2), Rational(1, 3)}), (RatVector{3, 2}));
  EXPECT_EQ(primitive_integer({4, 0, -6}), (RatVector{2, 0, -3}));
  EXPECT_EQ(primitive_integer({0, 0}), (RatVector{0, 0}));
}

TEST(VectorOps, DotAndArithmetic) {
  const RatVector a{1, 2, 3};
  const RatVector b{Rational(1, 2), -1, 0};
  EXPECT_EQ(crnreal::dot(a, b), Rational(-3, 2));
  EXPECT_EQ(a + b, (RatVector{Rational(3, 2), 1, 3}));
  EXPECT_EQ(a - b, (RatVector{Rational(1, 2), 3, 3}));
  EXPECT_EQ(Rational(2) * b, (RatVector{1, -2, 0}));
  EXPECT_THROW(crnreal::dot(a, RatVector{1}), Error);
}

TEST(RationalProperty, AdditionIsExactAndCanonical) {
  fixtures::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Rational a(rng.between(-1000, 1000), rng.between(1, 1000));
    Rational b(rng.between(-1000, 1000), rng.between(1, 1000));
    a.canonicalize();
    b.canonicalize();
    const Rational back = (a + b) - b;
    EXPECT_EQ(back, a);
    EXPECT_EQ(gcd(back.get_num(), back.get_den()), 1);
    EXPECT_GT(back.get_den(), 0);
    EXPECT_EQ(parse_rational(crnreal::to_string(a)), a);
  }
}
