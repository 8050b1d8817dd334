#include <gtest/gtest.h>

#include <cmath>

#include "arithdyn/rational.hpp"
#include "arithdyn/text_format.hpp"

using namespace arithdyn;

TEST(Rational, CanonicalForm) {
  Rational a(6, -4);
  a.canonicalize();
  EXPECT_EQ(a.get_num(), -3);
  EXPECT_EQ(a.get_den(), 2);
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(Rational(0).get_den(), 1);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational(" 4/8 "), Rational(1, 2));
  EXPECT_EQ(parse_rational("17"), Rational(17));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(Rational, ListRoundTrip) {
  const auto v = parse_rational_list("1, -3/2, 0");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(to_string(std::span<const Rational>(v)), "1, -3/2, 0");
}

TEST(Rational, LogAbsLargeIntegers) {
  EXPECT_NEAR(log_abs(Integer(10)), std::log(10.0), 1e-15);
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 2000);
  EXPECT_NEAR(log_abs(big), 2000 * std::log(3.0), 1e-9);
  EXPECT_NEAR(log_abs(Integer(-7)), std::log(7.0), 1e-15);
}

TEST(Rational, LcmOfDenominators) {
  const RationalVector v{Rational(1, 6), Rational(1, 10), Rational(3)};
  EXPECT_EQ(lcm_of_denominators(v), 30);
}

TEST(SizeGuard, RejectsOversizedIntegers) {
  SizeGuard guard{16};
  EXPECT_NO_THROW(guard.check(Integer(65535)));
  EXPECT_THROW(guard.check(Integer(65536)), SizeLimitExceeded);
  EXPECT_THROW(guard.check(Rational(1, 70000)), SizeLimitExceeded);
  try {
    guard.check(Integer(Integer(1) << 40));
    FAIL();
  } catch (const SizeLimitExceeded& e) {
    EXPECT_EQ(e.bits(), 41u);
    EXPECT_EQ(e.budget(), 16u);
  }
}

TEST(SizeGuard, TermBudget) {
  SizeGuard guard;
  guard.max_terms = 10;
  EXPECT_NO_THROW(guard.check_terms(10));
  EXPECT_THROW(guard.check_terms(11), SizeLimitExceeded);
  EXPECT_THROW(guard.check_product(30, 30), SizeLimitExceeded);
}

TEST(TextFormat, KeyValues) {
  const auto kv = parse_key_values("# comment\nname: a\n\nvars: [x, y]\n");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("name").value, "a");
  EXPECT_EQ(kv.at("vars").line, 4u);
  EXPECT_THROW(parse_key_values("a: 1\na: 2\n"), FormatError);
  EXPECT_THROW(parse_key_values("no colon here\n"), FormatError);
}

TEST(TextFormat, TopLevelSplit) {
  const auto parts = split_top_level("[1, 2], (x, y), z", ',');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(trim(parts[1]), "(x, y)");
  const auto list = parse_bracket_list("[y, (x + 1)*(y - 1)]");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[1], "(x + 1)*(y - 1)");
}
