#include <gtest/gtest.h>

#include "support.hpp"

namespace lcg {
namespace {

TEST(Exponent, StaysInLowestTerms) {
  Exponent e(6, 4);
  EXPECT_EQ(e.numerator(), 3);
  EXPECT_EQ(e.denominator(), 2);
  EXPECT_EQ(Exponent(-2, -4), Exponent(1, 2));
  EXPECT_EQ(Exponent(1, 2) + Exponent(1, 3), Exponent(5, 6));
  EXPECT_EQ(Exponent(3, 2) / Exponent(2), Exponent(3, 4));
  EXPECT_THROW(Exponent(1, 0), DivisionByZero);
  EXPECT_THROW(Exponent(1) / Exponent(0), DivisionByZero);
}

TEST(Order, InfinityDominates) {
  EXPECT_LT(Order(Exponent(100)), Order::infinity());
  EXPECT_EQ(Order::infinity() + Order(3), Order::infinity());
  EXPECT_EQ(Order::infinity() - Exponent(3), Order::infinity());
  EXPECT_EQ(min_order(Order(2), Order::infinity()), Order(2));
  EXPECT_THROW((void)Order::infinity().exponent(), DomainError);
  EXPECT_EQ(Order(Exponent(5, 2)).str(), "5/2");
}

TEST(Rational, SqrtOnlyOfSquares) {
  EXPECT_EQ(Rational::sqrt(BigRational(9, 4)), BigRational(3, 2));
  EXPECT_THROW(Rational::sqrt(BigRational(2)), ModeError);
  EXPECT_THROW(Rational::sqrt(BigRational(-1)), DomainError);
  EXPECT_THROW(Rational::parse("0.5"), ModeError);
  EXPECT_EQ(Rational::parse("-7/21"), BigRational(-1, 3));
}

TEST(Real, ZeroThresholdFollowsPrecision) {
  numeric::ScopedPrecision p(256);
  EXPECT_TRUE(Real::is_zero(mp::ldexp(BigFloat(1), -130)));
  EXPECT_FALSE(Real::is_zero(mp::ldexp(BigFloat(1), -120)));
  EXPECT_EQ(Real::sign(BigFloat(-3)), -1);
  EXPECT_TRUE(Real::equal(Real::parse("0.25"), Real::parse("1/4")));
  {
    numeric::ScopedPrecision q(128);
    EXPECT_EQ(numeric::precision_bits(), 128U);
    EXPECT_TRUE(Real::is_zero(mp::ldexp(BigFloat(1), -70)));
  }
  EXPECT_EQ(numeric::precision_bits(), 256U);
  EXPECT_THROW(numeric::set_precision(32), DomainError);
}

TEST(Real, CancellationIsRelative) {
  numeric::ScopedPrecision p(256);
  const BigFloat big = mp::ldexp(BigFloat(1), 80);
  EXPECT_TRUE(Real::cancels(mp::ldexp(BigFloat(1), -120), big));
  EXPECT_FALSE(Real::cancels(BigFloat(1), big));
}

TEST(GuardPrecision, RestoresAndDoesNotNest) {
  numeric::ScopedPrecision p(256);
  {
    numeric::GuardPrecision outer(numeric::Threshold::Tighten);
    EXPECT_EQ(numeric::precision_bits(), 1024U);
    EXPECT_EQ(numeric::outer_tau(), mp::ldexp(BigFloat(1), -128));
    {
      numeric::GuardPrecision inner(numeric::Threshold::Verify);
      EXPECT_EQ(numeric::precision_bits(), 1024U);
    }
    EXPECT_EQ(numeric::precision_bits(), 1024U);
  }
  EXPECT_EQ(numeric::precision_bits(), 256U);
  EXPECT_EQ(numeric::tau(), mp::ldexp(BigFloat(1), -128));
}

TEST(Convert, RationalToReal) {
  auto a = parse_series<Rational>("1/3 + 2*eps^(1/2) + O(eps^3)");
  auto b = convert<Real>(a);
  EXPECT_EQ(b.trunc(), Order(3));
  EXPECT_TRUE(same_value(b, parse_series<Real>("1/3 + 2*eps^(1/2) + O(eps^3)")));
}

} // namespace
} // namespace lcg
