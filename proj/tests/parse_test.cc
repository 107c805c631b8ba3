#include "gasing/parse.h"

#include <gtest/gtest.h>

#include "gasing/errors.h"
#include "generators.h"

namespace gasing {
namespace {

using test::Rng;

TEST(ParseTest, Examples) {
  const TrigPoly c = TrigPoly::cos("a"), s = TrigPoly::sin("a");
  EXPECT_TRUE(expr_equals(parse("cos(a)^2 + sin(a)^2"), c * c + s * s));
  EXPECT_TRUE(expr_equals(parse("tan(a)"), TrigRational(s, c)));
  EXPECT_TRUE(expr_equals(parse("sec(a)^2 - tan(a)^2"),
                          TrigRational(TrigPoly(1) - s * s, c * c)));
  EXPECT_TRUE(expr_equals(parse("cot(a) * csc(a)"), TrigRational(c, s * s)));
  EXPECT_TRUE(expr_equals(parse("-2*b*c*cos(alpha) + b^2"),
                          TrigRational(TrigPoly(-2) * TrigPoly::length("b") *
                                           TrigPoly::length("c") * TrigPoly::cos("alpha") +
                                       TrigPoly::length("b").pow(2))));
  EXPECT_TRUE(expr_equals(parse("sin(a+b)"), TrigRational(TrigPoly::sin("a+b"))));
  EXPECT_TRUE(expr_equals(parse("sqrt(12)/2*x"),
                          TrigRational(TrigPoly::length("x").scaled(sqrt_of(Rational(3))))));
  EXPECT_TRUE(expr_equals(parse("  ( 1 )  "), TrigRational(1)));
}

TEST(ParseTest, ExactAndDegrees) {
  EXPECT_EQ(parse_exact("12/(sqrt(3) - 1)"),
            ExactReal(6) + ExactReal(6) * sqrt_of(Rational(3)));
  EXPECT_EQ(parse_exact("3/4"), ExactReal(Rational(3, 4)));
  EXPECT_THROW(parse_exact("sin(a)"), ParseError);
  EXPECT_EQ(parse_degrees("30deg"), 30);
  EXPECT_EQ(parse_degrees("135"), 135);
  EXPECT_THROW(parse_degrees("30rad"), ParseError);
  EXPECT_THROW(parse_degrees(""), ParseError);
}

std::size_t offset_of(const std::string& input) {
  try {
    parse(input);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for '" << input << "'";
  return std::string::npos;
}

TEST(ParseTest, DegreeLiterals) {
  EXPECT_TRUE(expr_equals(parse("sin(30deg)"), TrigRational(Rational(1, 2))));
  EXPECT_TRUE(expr_equals(parse("cos(45deg)*sqrt(2)"), TrigRational(1)));
  EXPECT_TRUE(expr_equals(parse("tan(60deg)^2 + sin(150deg)"), TrigRational(Rational(7, 2))));
  EXPECT_TRUE(expr_equals(parse("cos(-120deg)"), TrigRational(Rational(-1, 2))));
  EXPECT_TRUE(expr_equals(parse("sec(0deg) * x"), TrigRational(TrigPoly::length("x"))));
  EXPECT_THROW(parse("tan(90deg)"), DomainError);
  EXPECT_THROW(parse("csc(180deg)"), DomainError);
  EXPECT_THROW(parse("sin(20deg)"), UnsupportedError);
  // Not a literal: an angle named "adeg".
  EXPECT_TRUE(expr_equals(parse("sin(adeg)"), TrigRational(TrigPoly::sin("adeg"))));
}

TEST(ParseTest, ErrorOffsets) {
  EXPECT_EQ(offset_of("cos(a) +"), 8u);
  EXPECT_EQ(offset_of("cos(a) * * 2"), 9u);
  EXPECT_EQ(offset_of("(1 + 2"), 6u);
  EXPECT_EQ(offset_of("x ^ y"), 4u);
  EXPECT_EQ(offset_of("1 $ 2"), 2u);
  EXPECT_EQ(offset_of("cos()"), 4u);
  EXPECT_THROW(parse("1/0"), ParseError);
  EXPECT_THROW(parse("sqrt(-2)"), ParseError);
}

TEST(ParseTest, UnknownFunction) {
  try {
    parse("exp(a)");
    FAIL() << "exp accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 0u);
    EXPECT_NE(std::string(e.what()).find("exp"), std::string::npos);
  }
}

TEST(ParseTest, RoundTrip) {
  Rng rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const TrigPoly num = test::random_poly(rng, 4, 3);
    TrigRational e(num);
    if (test::uniform_int(rng, 0, 1) == 1)
      e = TrigRational(num, test::random_nonzero_poly(rng, 2, 2));
    e = e.normalized();
    const std::string text = e.str();
    SCOPED_TRACE(text);
    const TrigRational back = parse(text);
    ASSERT_TRUE(expr_equals(back, e));
    ASSERT_EQ(back.str(), text);
  }
}

TEST(ParseTest, SpecialForms) {
  EXPECT_EQ(parse_exact("1/2 * sqrt(3)"), sqrt_of(Rational(3)) / ExactReal(2));
  const TrigRational sum = parse("sin(a)^2 + cos(a)^2");
  EXPECT_FALSE(expr_equals(sum, TrigRational(1)));
  EXPECT_EQ(sum.str(), "cos(a)^2 + sin(a)^2");
}

TEST(ParseTest, Precedence) {
  const TrigPoly x = TrigPoly::length("x"), y = TrigPoly::length("y");
  EXPECT_TRUE(expr_equals(parse("-x^2"), TrigRational(-(x * x))));
  EXPECT_TRUE(expr_equals(parse("x - y - x"), TrigRational(-y)));
  EXPECT_TRUE(expr_equals(parse("x / y / x"), TrigRational(TrigPoly(1), y)));
  EXPECT_TRUE(expr_equals(parse("2 * x ^ 2 + 1"), TrigRational(TrigPoly(2) * x * x + TrigPoly(1))));
  EXPECT_TRUE(expr_equals(parse("(x + y)^2"), TrigRational((x + y) * (x + y))));
}

}  // namespace
}  // namespace gasing
