#include "gha/rational.hpp"

#include <gtest/gtest.h>

namespace gha {
namespace {

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational::parse(" 0/5 ").str(), "0");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("a/b"), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_LT(b, a);
  EXPECT_EQ((-a).sign(), -1);
}

TEST(Rational, LargeValuesStayExact) {
  Rational x = Rational(2).pow(200) + Rational(1, 3);
  EXPECT_EQ(x - Rational(2).pow(200), Rational(1, 3));
  EXPECT_EQ(Rational::parse(x.str()), x);
}

}  // namespace
}  // namespace gha
