#include "gasing/exactnum.h"

#include <cmath>

#include <gtest/gtest.h>

#include "gasing/errors.h"
#include "generators.h"

namespace gasing {
namespace {

using test::Rng;

ExactReal S(long n) { return sqrt_of(Rational(n)); }

TEST(ExactRealTest, CanonicalText) {
  EXPECT_EQ((S(3) / ExactReal(2)).str(), "sqrt(3)/2");
  EXPECT_EQ((ExactReal(6) + ExactReal(6) * S(3)).str(), "6 + 6*sqrt(3)");
  EXPECT_EQ((-S(2)).str(), "-sqrt(2)");
  EXPECT_EQ(ExactReal().str(), "0");
  EXPECT_EQ(ExactReal(Rational(-4, 5)).str(), "-4/5");
}

TEST(ExactRealTest, RadicalsAreReducedToSquarefree) {
  EXPECT_EQ(S(12), ExactReal(2) * S(3));
  EXPECT_EQ(S(148), ExactReal(2) * S(37));
  EXPECT_EQ(S(49), ExactReal(7));
  EXPECT_EQ(sqrt_of(Rational(3, 4)), S(3) / ExactReal(2));
  EXPECT_EQ(S(2) * S(3), S(6));
  const SquarefreeSplit split = squarefree_split(Integer(72));
  EXPECT_EQ(split.square, 6);
  EXPECT_EQ(split.core, 2);
  EXPECT_THROW(sqrt_of(Rational(-1)), DomainError);
}

TEST(ExactRealTest, InverseRationalizesDenominators) {
  // 12/(sqrt 3 - 1) = 6 + 6 sqrt 3
  const ExactReal x = ExactReal(12) / (S(3) - ExactReal(1));
  EXPECT_EQ(x, ExactReal(6) + ExactReal(6) * S(3));
  const ExactReal y = ExactReal(1) / (S(2) + S(3) + S(5));
  EXPECT_EQ(y * (S(2) + S(3) + S(5)), ExactReal(1));
  EXPECT_THROW(ExactReal(1) / ExactReal(), ArithmeticError);
}

TEST(ExactRealTest, CompareSettlesCloseValues) {
  EXPECT_EQ(compare(S(2), ExactReal(Rational(3, 2))), std::strong_ordering::less);
  EXPECT_EQ(compare(S(2) + S(3), S(10)), std::strong_ordering::less);
  EXPECT_EQ(compare(S(2) + S(3), ExactReal(Rational(314, 100))), std::strong_ordering::greater);
  EXPECT_EQ(compare(S(3) - S(2), ExactReal(0)), std::strong_ordering::greater);
  // 1.41421356237309504880 vs 1.414213562373095: differs far past double.
  const ExactReal close = ExactReal(Rational(1414213562373095, 1000000000000000));
  EXPECT_EQ(compare(S(2), close), std::strong_ordering::greater);
  EXPECT_EQ(S(2).sign(), 1);
  EXPECT_EQ((S(2) - S(3)).sign(), -1);
}

TEST(ExactRealTest, TrySqrtDenests) {
  EXPECT_EQ(try_sqrt(ExactReal(4) + ExactReal(2) * S(3)), ExactReal(1) + S(3));
  EXPECT_EQ(try_sqrt(ExactReal(148)), ExactReal(2) * S(37));
  EXPECT_EQ(try_sqrt(ExactReal(Rational(1, 4))), ExactReal(Rational(1, 2)));
  EXPECT_EQ(try_sqrt(ExactReal(Rational(3, 4))), S(3) / ExactReal(2));
  // 25 + 12 sqrt 3 has no root of the form p + q sqrt m.
  EXPECT_FALSE(try_sqrt(ExactReal(25) + ExactReal(12) * S(3)).has_value());
  EXPECT_THROW(try_sqrt(ExactReal(-2)), DomainError);
}

TEST(ExactRealTest, EnclosureContainsValue) {
  const ExactReal x = ExactReal(6) + ExactReal(6) * S(3);
  const RationalInterval box = enclose(x, 64);
  const double v = 6.0 + 6.0 * std::sqrt(3.0);
  EXPECT_LE(box.lo.get_d(), v + 1e-12);
  EXPECT_GE(box.hi.get_d(), v - 1e-12);
  EXPECT_NEAR(to_float(x), 16.392304845413264, 1e-12);
}

class FieldAxiomsTest : public ::testing::Test {
 protected:
  Rng rng_{20240611};
};

TEST_F(FieldAxiomsTest, RandomTriples) {
  for (int i = 0; i < 1000; ++i) {
    const ExactReal x = test::random_exact(rng_);
    const ExactReal y = test::random_exact(rng_);
    const ExactReal z = test::random_exact(rng_);
    SCOPED_TRACE(x.str() + " | " + y.str() + " | " + z.str());
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x + ExactReal(0), x);
    ASSERT_EQ(x * ExactReal(1), x);
    ASSERT_TRUE((x - x).is_zero());
    if (!x.is_zero()) {
      ASSERT_EQ(x * x.inverse(), ExactReal(1));
      ASSERT_EQ((y / x) * x, y);
    }
  }
}

TEST_F(FieldAxiomsTest, OrderAgreesWithLongDouble) {
  for (int i = 0; i < 1000; ++i) {
    const ExactReal x = test::random_exact(rng_);
    const ExactReal y = test::random_exact(rng_);
    const long double d = test::naive_value(x) - test::naive_value(y);
    if (std::fabs(d) < 1e-9L) continue;
    SCOPED_TRACE(x.str() + " vs " + y.str());
    EXPECT_EQ(compare(x, y) < 0, d < 0);
    EXPECT_NEAR(to_float(x), static_cast<double>(test::naive_value(x)), 1e-12);
  }
}

TEST_F(FieldAxiomsTest, TrySqrtOfSquares) {
  for (int i = 0; i < 300; ++i) {
    // p + q sqrt(m) squared always has a root in the tower.
    const long m = std::vector<long>{2, 3, 5, 6, 7}[test::uniform_int(rng_, 0, 4)];
    const ExactReal r = ExactReal(test::random_rational(rng_)) +
                        ExactReal::radical(test::random_rational(rng_), Integer(m));
    const ExactReal root = r.sign() < 0 ? -r : r;
    SCOPED_TRACE(root.str());
    const auto got = try_sqrt(root * root);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, root);
  }
}

TEST(ExactRealTest, SquareRootExamples) {
  EXPECT_EQ(S(0), ExactReal(0));
  // 2 sqrt(37) squared is 148, checked in integer arithmetic.
  const ExactReal r = S(148) / ExactReal(2);
  EXPECT_EQ(r, S(37));
  EXPECT_EQ((ExactReal(2) * r) * (ExactReal(2) * r), ExactReal(148));
  EXPECT_EQ(to_float(ExactReal(0)), 0.0);
}

TEST(ExactRealTest, ArithmeticExamples) {
  const ExactReal quotient = ExactReal(12) / (S(3) - ExactReal(1));
  EXPECT_EQ(quotient * (S(3) - ExactReal(1)), ExactReal(12));
  const ExactReal half(Rational(1, 2));
  EXPECT_EQ(half * half + (half * S(3)) * (half * S(3)), ExactReal(1));
  EXPECT_EQ(arith(S(2), S(3), ArithOp::Mul), S(6));
  EXPECT_THROW(arith(S(2), ExactReal(0), ArithOp::Div), ArithmeticError);
}

TEST(ExactRealTest, CompareExamples) {
  EXPECT_EQ(compare(ExactReal(6) * S(2), ExactReal(6) * S(2)), std::strong_ordering::equal);
  // 148 > 144.
  EXPECT_EQ(compare(ExactReal(2) * S(37), ExactReal(12)), std::strong_ordering::greater);
}

}  // namespace
}  // namespace gasing
