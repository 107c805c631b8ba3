#include "gasing/derive.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "formula_table.h"
#include "gasing/errors.h"
#include "gasing/parse.h"
#include "gasing/sweep.h"

namespace gasing {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

TEST(DeriveTest, EveryNameResolves) {
  for (const auto& name : derivation_names()) {
    const Derivation d = derive_by_name(name);
    EXPECT_FALSE(d.formulas.empty()) << name;
    EXPECT_FALSE(d.trace.steps.empty()) << name;
  }
  EXPECT_THROW(derive_by_name("nonsense"), DomainError);
  EXPECT_THROW(derived_functions().formula("nonsense"), DomainError);
}

class FormulaTest : public ::testing::TestWithParam<test::FormulaCase> {};

TEST_P(FormulaTest, MatchesTextbookForm) {
  const test::FormulaCase& fc = GetParam();
  const Derivation d = derive_by_name(fc.derivation);
  const Formula& f = d.formula(fc.tag);
  EXPECT_TRUE(expr_equals(f.rhs, parse(fc.printed)))
      << f.str() << " vs " << fc.printed;
}

TEST_P(FormulaTest, AgreesWithMachineTrig) {
  const test::FormulaCase& fc = GetParam();
  const Derivation d = derive_by_name(fc.derivation);
  const Formula& f = d.formula(fc.tag);
  SampleSpace space = fc.space;
  space.avoid.merge(f.conditions);
  // Denominators stay away from zero as well.
  require_nonzero(f.rhs, space.avoid);
  const auto points = sample_points(space, 1000, std::hash<std::string>{}(fc.tag));
  // Relative above magnitude 1: near a pole the rounding of the oracle's own
  // input is amplified beyond any fixed absolute bound.
  const SweepStats stats =
      sweep_max_error(f.rhs, fc.oracle, points, ErrorMeasure::Scaled);
  EXPECT_EQ(stats.points, 1000u);
  EXPECT_LE(stats.max_error, 1e-12) << f.str() << " worst at index " << stats.worst;
}

std::vector<test::FormulaCase> all_cases() { return test::formula_cases(); }

INSTANTIATE_TEST_SUITE_P(
    All, FormulaTest, ::testing::ValuesIn(all_cases()),
    [](const ::testing::TestParamInfo<test::FormulaCase>& info) {
      std::string n = info.param.tag;
      for (char& ch : n)
        if (ch == '-') ch = '_';
      return n;
    });

TEST(DeriveTest, DerivedFunctionsCarryConditions) {
  const Derivation d = derived_functions();
  EXPECT_TRUE(d.formula("tan").conditions.contains("cos(a) != 0"));
  EXPECT_TRUE(d.formula("csc").conditions.contains("sin(a) != 0"));
}

TEST(DeriveTest, SumFormulaAtZeroSecondAngle) {
  // b = 0 reduces the sum formulas to sin(a), cos(a).
  const Derivation d = sum_formulas();
  const TrigPoly one(1), zero;
  for (const char* tag : {"sin-sum", "cos-sum"}) {
    const TrigRational r = d.formula(tag)
                               .rhs.substitute(Variable::cos("b"), one)
                               .substitute(Variable::sin("b"), zero);
    EXPECT_TRUE(expr_equals(r, tag[0] == 's' ? TrigRational(TrigPoly::sin("a"))
                                             : TrigRational(TrigPoly::cos("a"))));
  }
}

TEST(DeriveTest, DifferenceMatchesSumUnderNegation) {
  const Derivation sum = sum_formulas();
  const Derivation diff = difference_formulas();
  const TrigPoly neg_sin = -TrigPoly::sin("b");
  for (const auto& [s, d] : {std::pair{"sin-sum", "sin-difference"},
                             std::pair{"cos-sum", "cos-difference"}}) {
    const TrigRational flipped =
        sum.formula(s).rhs.substitute(Variable::sin("b"), neg_sin);
    EXPECT_TRUE(expr_equals(flipped, diff.formula(d).rhs)) << d;
  }
}

TEST(DeriveTest, DoubleAngleFormsAreConsistent) {
  const Derivation d = double_angle();
  const TrigPoly c = TrigPoly::cos("a"), s = TrigPoly::sin("a");
  // sin(2a) is sin(a+b) at b = a.
  const TrigRational from_sum = sum_formulas()
                                    .formula("sin-sum")
                                    .rhs.substitute(Variable::cos("b"), c)
                                    .substitute(Variable::sin("b"), s);
  EXPECT_TRUE(expr_equals(from_sum, d.formula("sin-double").rhs));
  // The cos-only and sin-only forms differ from c^2 - s^2 by a Pythagorean
  // multiple, so they stay unequal in the free ring.
  EXPECT_FALSE(expr_equals(d.formula("cos-double").rhs, d.formula("cos-double-cos").rhs));
  const TrigPoly gap = (d.formula("cos-double-cos").rhs - d.formula("cos-double").rhs)
                           .normalized()
                           .num();
  EXPECT_TRUE(membership_certificate(gap).has_value());
  bool flagged = false;
  for (const auto& step : d.trace.steps) flagged |= step.identity_dependent;
  EXPECT_TRUE(flagged);
}

TEST(DeriveTest, CosineRuleNumericExample) {
  const Derivation d = cosine_rule();
  const Formula& f = d.formula("cosine-rule");
  Assignment at;
  at.angles["alpha"] = 120 * kDeg;
  at.lengths = {{"b", 8.0}, {"c", 6.0}};
  EXPECT_NEAR(eval_numeric(f.rhs, at), 148.0, 1e-12);
  at.angles["alpha"] = 90 * kDeg;
  at.lengths = {{"b", 3.0}, {"c", 4.0}};
  EXPECT_NEAR(eval_numeric(f.rhs, at), 25.0, 1e-12);
}

TEST(DeriveTest, CofunctionAtFixedAngle) {
  const Derivation d = cofunction();
  Assignment at;
  at.angles["a"] = 0.35;
  const double g = std::numbers::pi / 2 - 0.35;
  EXPECT_NEAR(eval_numeric(d.formula("cofunction-cos").rhs, at), std::cos(g), 1e-15);
  EXPECT_NEAR(eval_numeric(d.formula("cofunction-tan").rhs, at), std::tan(g), 1e-14);
}

TEST(QuadrantTest, SignsByQuadrant) {
  const int cos_sign[] = {0, 1, -1, -1, 1};
  const int sin_sign[] = {0, 1, 1, -1, -1};
  for (int q = 1; q <= 4; ++q) {
    const SignedPair p = quadrant_signed(Angle::symbolic("a", q));
    EXPECT_TRUE(expr_equals(p.cos, TrigRational(TrigPoly::cos("a").scaled(cos_sign[q]))))
        << q;
    EXPECT_TRUE(expr_equals(p.sin, TrigRational(TrigPoly::sin("a").scaled(sin_sign[q]))))
        << q;
  }
  EXPECT_THROW(quadrant_signed(Angle::symbolic("a", 5)), DomainError);
  EXPECT_THROW(quadrant_signed(Angle::special(120, 1)), DomainError);
  EXPECT_EQ(Angle::symbolic("a", 3).str(), "180deg+a");
  EXPECT_EQ(Angle::special(30, 2).str(), "150deg");
}

TEST(QuadrantTest, EveryIntegerDegree) {
  for (int d = 0; d < 360; ++d) {
    const DegreeDecomposition dd = decompose_degrees(d);
    ASSERT_GE(dd.reference, 0);
    ASSERT_LE(dd.reference, 90);
    const double ref = dd.reference * kDeg;
    const SignedPair p =
        quadrant_signed(Angle::symbolic("r", dd.quadrant));
    Assignment at;
    at.angles["r"] = ref;
    const double c = eval_numeric(p.cos, at), s = eval_numeric(p.sin, at);
    ASSERT_NEAR(c * c + s * s, 1.0, 1e-12) << d;
    ASSERT_NEAR(c, std::cos(d * kDeg), 1e-12) << d;
    ASSERT_NEAR(s, std::sin(d * kDeg), 1e-12) << d;
  }
}

TEST(QuadrantTest, ExactRatiosOfSpecialDegrees) {
  const ExactReal half(Rational(1, 2));
  EXPECT_EQ(exact_ratios(150).sin, half);
  EXPECT_EQ(exact_ratios(150).cos, -sqrt_of(Rational(3)) / ExactReal(2));
  EXPECT_EQ(exact_ratios(225).sin, -sqrt_of(Rational(2)) / ExactReal(2));
  EXPECT_EQ(exact_ratios(300).cos, half);
  for (int d = 0; d < 360; d += 15) {
    const DegreeDecomposition dd = decompose_degrees(d);
    if (dd.reference % 15 != 0 || dd.reference == 15 || dd.reference == 75) continue;
    const SpecialRatios r = exact_ratios(d);
    EXPECT_EQ(r.sin * r.sin + r.cos * r.cos, ExactReal(1)) << d;
    EXPECT_NEAR(to_float(r.sin), std::sin(d * kDeg), 1e-15) << d;
  }
}

TEST(SpecialValueTest, TableAndUndefined) {
  EXPECT_EQ(special_value("tan", 60), sqrt_of(Rational(3)));
  EXPECT_EQ(special_value("sec", 45), sqrt_of(Rational(2)));
  EXPECT_EQ(special_value("cot", 30), sqrt_of(Rational(3)));
  EXPECT_EQ(special_value("csc", 30), ExactReal(2));
  EXPECT_EQ(special_value("sin", 0), ExactReal(0));
  EXPECT_THROW(special_value("tan", 90), DomainError);
  EXPECT_THROW(special_value("csc", 0), DomainError);
  EXPECT_THROW(special_value("sin", 20), UnsupportedError);
}

TEST(TraceTest, CombinationsCheckOutAndTamperingIsCaught) {
  for (const auto& name : derivation_names()) {
    const Derivation d = derive_by_name(name);
    EXPECT_EQ(first_inconsistent_step(d.trace), d.trace.size()) << name;
    for (const auto& step : d.trace.steps) {
      EXPECT_FALSE(step.description.empty());
      EXPECT_FALSE(step.ref.empty());
    }
  }
  Derivation d = sum_formulas();
  for (std::size_t i = 0; i < d.trace.size(); ++i) {
    if (d.trace.steps[i].combination.empty()) continue;
    d.trace.steps[i].rhs = d.trace.steps[i].rhs + TrigRational(1);
    EXPECT_EQ(first_inconsistent_step(d.trace), i);
    break;
  }
}

TEST(SolveLinearTest, IsolatesVariable) {
  const Variable x = Variable::length("x");
  const TrigRational lhs = TrigRational(TrigPoly::cos("a")) * TrigPoly(x);
  EXPECT_TRUE(expr_equals(solve_linear(x, lhs, TrigPoly::sin("a")),
                          TrigRational(TrigPoly::sin("a"), TrigPoly::cos("a"))));
  EXPECT_THROW(solve_linear(x, TrigPoly(x).pow(2), TrigRational(1)), DomainError);
  EXPECT_THROW(solve_linear(x, TrigPoly::sin("a"), TrigRational(1)), DomainError);
}

TEST(DeriveTest, NumericExamples) {
  const Derivation fns = derived_functions();
  Assignment at;
  at.angles["a"] = std::numbers::pi / 3;
  EXPECT_NEAR(eval_numeric(fns.formula("sec").rhs, at), 2.0, 1e-15);
  const Derivation sum = sum_formulas();
  at.angles = {{"a", 0.3}, {"b", 0.4}};
  EXPECT_NEAR(eval_numeric(sum.formula("sin-sum").rhs, at), std::sin(0.7), 1e-12);
  EXPECT_NEAR(eval_numeric(sum.formula("cos-sum").rhs, at), std::cos(0.7), 1e-12);
  const Derivation diff = difference_formulas();
  at.angles = {{"a", 0.61}, {"b", 0.61}};
  EXPECT_NEAR(eval_numeric(diff.formula("cos-difference").rhs, at), 1.0, 1e-15);
  EXPECT_NEAR(eval_numeric(diff.formula("sin-difference").rhs, at), 0.0, 1e-15);
}

bool has_step(const DerivationTrace& t, const TrigRational& lhs, const TrigRational& rhs) {
  for (const auto& step : t.steps) {
    if (expr_equals(step.difference(), rhs - lhs) || expr_equals(step.difference(), lhs - rhs))
      return true;
  }
  return false;
}

TEST(DeriveTest, RuleTraces) {
  const Derivation sr = sine_rule();
  EXPECT_TRUE(has_step(sr.trace, parse("c*sin(alpha)"), parse("a*sin(gamma)")));
  EXPECT_TRUE(expr_equals(*sr.formula("sine-rule").lhs, parse("a/sin(alpha)")));
  // a sin 30 = 6 sin 45 read as a/sin(45) = 6/sin(30) with alpha = 45.
  const std::map<std::string, ExactReal> v{
      {"sin(alpha)", sqrt_of(Rational(2)) / ExactReal(2)},
      {"sin(gamma)", ExactReal(Rational(1, 2))},
      {"c", ExactReal(6)}};
  const ExactReal a_value =
      eval_exact(sr.formula("sine-rule").rhs, v) * (sqrt_of(Rational(2)) / ExactReal(2));
  EXPECT_EQ(a_value, ExactReal(6) * sqrt_of(Rational(2)));

  const Derivation cr = cosine_rule();
  EXPECT_TRUE(has_step(cr.trace, parse("a^2"),
                       parse("b^2 + c^2*(cos(alpha)^2 + sin(alpha)^2) - 2*b*c*cos(alpha)")));
  EXPECT_TRUE(cr.trace.back().identity_dependent);
}

TEST(DeriveTest, CofunctionExamples) {
  const Derivation d = cofunction();
  EXPECT_TRUE(expr_equals(d.formula("cofunction-cos").rhs, parse("sin(a)")));
  EXPECT_TRUE(expr_equals(d.formula("cofunction-tan").rhs, parse("cot(a)")));
}

TEST(QuadrantTest, SpecialReferenceInFourthQuadrant) {
  const SignedPair p = quadrant_signed(Angle::special(30, 4));
  EXPECT_TRUE(expr_equals(p.cos, TrigRational(sqrt_of(Rational(3)) / ExactReal(2))));
  EXPECT_TRUE(expr_equals(p.sin, TrigRational(ExactReal(Rational(-1, 2)))));
  bool projection = false;
  for (const auto& step : quadrant_signed(Angle::symbolic("a", 2)).trace.steps)
    projection |= step.description.find("negative x-axis") != std::string::npos;
  EXPECT_TRUE(projection);
  EXPECT_EQ(special_value("sin", 30), ExactReal(Rational(1, 2)));
  EXPECT_EQ(special_value("sin", 45), sqrt_of(Rational(2)) / ExactReal(2));
}

}  // namespace
}  // namespace gasing
