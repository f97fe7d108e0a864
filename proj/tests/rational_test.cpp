#include <gtest/gtest.h>

#include <sstream>
#include <unordered_set>

#include "yperiod/errors.hpp"
#include "yperiod/rational.hpp"

using yperiod::Rational;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  EXPECT_EQ(q(6, -4).to_string(), "-3/2");
  EXPECT_EQ(q(-6, -4).to_string(), "3/2");
  EXPECT_EQ(q(0, -7).to_string(), "0");
  EXPECT_EQ(q(0, -7).denominator(), 1);
  EXPECT_EQ(q(10, 5).to_string(), "2");
}

TEST(Rational, NormalizeIsIdempotent) {
  const Rational a = Rational::normalize(mpz_class(-84), mpz_class(-36));
  EXPECT_EQ(a, Rational::normalize(a.numerator(), a.denominator()));
  EXPECT_EQ(a.to_string(), "7/3");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(q(1, 0), yperiod::ZeroDenominator);
  EXPECT_THROW(Rational::normalize(mpz_class(3), mpz_class(0)), yperiod::ZeroDenominator);
  EXPECT_THROW(Rational::parse("3", "0"), yperiod::ZeroDenominator);
}

TEST(Rational, DivisionByZeroRejected) {
  EXPECT_THROW(q(1) / q(0), yperiod::DivisionByZero);
  EXPECT_THROW(q(0).inverse(), yperiod::DivisionByZero);
  EXPECT_THROW(yperiod::arith(yperiod::ArithOp::Div, q(2), q(0)), yperiod::DivisionByZero);
}

TEST(Rational, ParseRoundTrip) {
  const Rational big = Rational::parse("-123456789012345678901234567890", "987654321098765432109876543210");
  EXPECT_EQ(Rational::parse(big.numerator().get_str(), big.denominator().get_str()), big);
  EXPECT_EQ(Rational::parse("4", "-6"), q(-2, 3));
  EXPECT_THROW(Rational::parse("1x", "2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("", "2"), std::invalid_argument);
}

TEST(Rational, ArithmeticExamples) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) - q(1, 3), q(1, 6));
  EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
  EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
  EXPECT_EQ(-q(2, 3), q(-2, 3));
  EXPECT_EQ(yperiod::arith(yperiod::ArithOp::Sub, q(1), q(1, 4)), q(3, 4));
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_GT(q(-1, 3), q(-1, 2));
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  yperiod::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const Rational a = yperiod::sample_positive(rng, 50) - q(3);
    const Rational b = yperiod::sample_positive(rng, 50) - q(2);
    const Rational c = yperiod::sample_positive(rng, 50);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + q(0), a);
    EXPECT_EQ(a * q(1), a);
    EXPECT_EQ(a - a, q(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), q(1));
      EXPECT_EQ(a / a, q(1));
    }
  }
}

TEST(Rational, SamplePositiveRangeAndDeterminism) {
  yperiod::Rng r1(7), r2(7);
  for (int t = 0; t < 500; ++t) {
    const Rational v = yperiod::sample_positive(r1, 10);
    EXPECT_EQ(v, yperiod::sample_positive(r2, 10));
    EXPECT_GT(v, q(0));
    EXPECT_LE(v, q(10));
    EXPECT_GE(v, q(1, 10));
    EXPECT_LE(v.denominator(), 10);
  }
}

TEST(Rational, HashAgreesWithEquality) {
  std::unordered_set<Rational> set;
  set.insert(q(2, 4));
  set.insert(q(1, 2));
  set.insert(q(-1, -2));
  EXPECT_EQ(set.size(), 1u);
}

TEST(Rational, StreamAndBitSize) {
  std::ostringstream out;
  out << q(-7, 3);
  EXPECT_EQ(out.str(), "-7/3");
  EXPECT_LT(q(1).bit_size(), Rational::parse("1", "1000000000000000000000").bit_size());
}
