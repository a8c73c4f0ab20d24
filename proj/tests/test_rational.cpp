#include <random>

#include <gtest/gtest.h>

#include "fischer/rational.hpp"

using fischer::BigInt;
using fischer::BigRational;
using fischer::Rational;

TEST(Rational, ReducesAndNormalizesSign) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_TRUE(Rational(10, 5).is_integer());
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParsesFractionsAndRejectsDecimals) {
  EXPECT_EQ(Rational::parse("1/2"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-16"), Rational(-16));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(Rational, PromotesOnOverflowAndDemotesBack) {
  const Rational big(std::int64_t{1} << 62);
  const Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.str(), "21267647932558653966460912964485513216");
  const Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  EXPECT_EQ(Rational(std::numeric_limits<std::int64_t>::min()).str(), "-9223372036854775808");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10").str(), "12345678901234567890123456789");
}

// Every operation agrees with the arbitrary-precision reference, including
// operands near the 64-bit boundary where the fast path must hand over.
TEST(Rational, MatchesBigRationalReference) {
  std::mt19937_64 rng(7);
  const std::int64_t edges[] = {1, 2, 3, 7, 1000003, (std::int64_t{1} << 31) - 1, (std::int64_t{1} << 62) + 1,
                                std::numeric_limits<std::int64_t>::max()};
  auto draw = [&] {
    std::int64_t n = (rng() & 1) ? edges[rng() % 8] : static_cast<std::int64_t>(rng() % 2001) - 1000;
    std::int64_t d = (rng() & 1) ? edges[rng() % 8] : static_cast<std::int64_t>(rng() % 999) + 1;
    if (rng() & 1) n = -n;
    return Rational(n, d);
  };
  for (int i = 0; i < 20000; ++i) {
    const Rational a = draw();
    const Rational b = draw();
    const BigRational ab = a.to_big(), bb = b.to_big();
    EXPECT_EQ((a + b).to_big(), ab + bb);
    EXPECT_EQ((a - b).to_big(), ab - bb);
    EXPECT_EQ((a * b).to_big(), ab * bb);
    if (!b.is_zero()) EXPECT_EQ((a / b).to_big(), ab / bb);
    EXPECT_EQ(a < b, ab < bb);
    EXPECT_EQ(a == b, ab == bb);
  }
}

TEST(Rational, InvertsNegativeBigValues) {
  const Rational big = Rational::parse("-123456789012345678901234567/5");
  ASSERT_FALSE(big.is_small());
  const Rational inv = inverse(big);
  EXPECT_EQ(inv.to_big(), BigRational(BigInt(-5), BigInt("123456789012345678901234567")));
  EXPECT_EQ(inv * big, Rational(1));
}
