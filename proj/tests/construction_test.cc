#include "gasing/construction.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gasing/errors.h"
#include "gasing/figures.h"
#include "generators.h"

namespace gasing {
namespace {

using test::Rng;

const TrigRational s = TrigPoly::sin("a");
const TrigRational c = TrigPoly::cos("a");

TrigRational random_factor(Rng& rng) {
  switch (test::uniform_int(rng, 0, 2)) {
    case 0:
      return TrigRational(test::random_nonzero_exact(rng));
    case 1:
      return TrigRational(test::random_nonzero_poly(rng));
    default:
      return TrigRational(test::random_nonzero_poly(rng)) /
             TrigRational(test::random_nonzero_poly(rng));
  }
}

TEST(TriangleTest, PrimaryAndSpecial) {
  const GasingTriangle t = primary_triangle({"a"}, {"A", "B", "C"});
  EXPECT_TRUE(expr_equals(t.hyp, TrigRational(1)));
  EXPECT_TRUE(expr_equals(t.opp, s));
  EXPECT_TRUE(expr_equals(t.adj, c));
  EXPECT_THROW(primary_triangle({"a"}, {"A", "A", "C"}), ConstructionError);

  const GasingTriangle t30 = special_triangle(30, {"A", "B", "C"});
  EXPECT_TRUE(expr_equals(t30.opp, TrigRational(ExactReal(Rational(1, 2)))));
  EXPECT_THROW(special_ratios(20), UnsupportedError);
  for (int d : {0, 30, 45, 60, 90}) {
    const SpecialRatios r = special_ratios(d);
    EXPECT_EQ(r.sin * r.sin + r.cos * r.cos, ExactReal(1)) << d;
    EXPECT_NEAR(to_float(r.sin), std::sin(d * std::numbers::pi / 180), 1e-15);
  }
}

TEST(TriangleTest, FromSidesRecordsDenominators) {
  const TrigRational x = TrigPoly::length("x");
  const GasingTriangle t =
      triangle_from_sides({"a"}, {"A", "B", "C"}, x, x * s, x * c);
  EXPECT_TRUE(expr_equals(t.sin_value, s));
  EXPECT_TRUE(t.conditions.contains("x != 0"));
  EXPECT_THROW(triangle_from_sides({"a"}, {"A", "B", "C"}, 0, s, c),
               ConstructionError);
}

TEST(ScaleSimilarTest, RejectsZero) {
  EXPECT_THROW(ScaleFactor::of(0), ConstructionError);
  const ScaleFactor k = ScaleFactor::of(TrigRational(1) / c);
  EXPECT_TRUE(k.conditions.contains("cos(a) != 0"));
  EXPECT_TRUE(scale_similar(primary_triangle({"a"}, {"A", "B", "C"}), k)
                  .conditions.contains("cos(a) != 0"));
}

TEST(ScaleSimilarTest, RatioPreservationAndComposition) {
  Rng rng(31337);
  const GasingTriangle base = primary_triangle({"a"}, {"A", "B", "C"});
  for (int i = 0; i < 500; ++i) {
    const TrigRational k1 = random_factor(rng);
    const TrigRational k2 = random_factor(rng);
    SCOPED_TRACE(k1.str() + " ; " + k2.str());
    const GasingTriangle t = scale_similar(base, ScaleFactor::of(k1));
    ASSERT_TRUE(expr_equals(t.opp / t.hyp, base.opp / base.hyp));
    ASSERT_TRUE(expr_equals(t.adj / t.hyp, base.adj / base.hyp));
    ASSERT_TRUE(expr_equals(t.hyp, k1));
    const GasingTriangle twice = scale_similar(t, ScaleFactor::of(k2));
    const GasingTriangle once = scale_similar(base, ScaleFactor::of(k1 * k2));
    ASSERT_TRUE(expr_equals(twice.hyp, once.hyp));
    ASSERT_TRUE(expr_equals(twice.opp, once.opp));
    ASSERT_TRUE(expr_equals(twice.adj, once.adj));
    ASSERT_TRUE(expr_equals(twice.sin_value, base.sin_value));
  }
}

TEST(ConstructionTest, AttachSharesAnEdgeAndChecksLength) {
  Construction fig;
  fig.attach(primary_triangle({"a"}, {"A", "B", "C"}));
  // A second unit triangle on hypotenuse AB: its edge AB has length 1 too.
  fig.attach(primary_triangle({"b"}, {"A", "B", "D"}),
             Gluing{SideHint::opposite("C"), std::nullopt, false});
  EXPECT_EQ(fig.points().size(), 4u);
  // A triangle with hypotenuse 1/cos(a) on edge AB conflicts with length 1.
  EXPECT_THROW(fig.attach(scale_similar(primary_triangle({"a"}, {"A", "B", "E"}),
                                        ScaleFactor::of(TrigRational(1) / c))),
               ConstructionError);
  EXPECT_THROW(fig.attach(primary_triangle({"a"}, {"X", "Y", "Z"})),
               ConstructionError);
}

TEST(ConstructionTest, EquateRecordsTheMismatch) {
  Construction fig;
  fig.attach(primary_triangle({"a"}, {"A", "B", "C"}));
  fig.attach(scale_similar(primary_triangle({"a"}, {"A", "B", "E"}),
                           ScaleFactor::of(TrigRational(1) / c)),
             Gluing{SideHint::opposite("C"), std::nullopt, true});
  ASSERT_EQ(fig.equations().size(), 1u);
  EXPECT_TRUE(expr_equals(fig.equations()[0].lhs, TrigRational(1) / c));
  EXPECT_TRUE(expr_equals(fig.equations()[0].rhs, TrigRational(1)));
}

TEST(ConstructionTest, TangentSecantTriangleSegments) {
  const Construction fig = build_figure7();
  EXPECT_TRUE(expr_equals(fig.length("A", "B"), TrigRational(1)));
  EXPECT_TRUE(expr_equals(fig.length("A", "D"), TrigRational(1) / c));
  EXPECT_TRUE(expr_equals(fig.length("B", "D"), s / c));
  EXPECT_TRUE(expr_equals(fig.length("A", "E"), TrigRational(1) / s));
  EXPECT_TRUE(expr_equals(fig.length("B", "E"), c / s));
  EXPECT_TRUE(expr_equals(fig.length("D", "E"), TrigRational(1) / (s * c)));
  EXPECT_THROW(fig.length("A", "Z"), ConstructionError);
  // Chain D-B-E: DE = DB + BE gives 1/(sc) = s/c + c/s in the free ring only
  // after multiplying out, which leaves c^2 + s^2 against 1.
  const ChainEquation chain = chain_equation(fig, {"D", "B", "E"});
  EXPECT_FALSE(expr_equals(chain.whole, chain.sum));
  EXPECT_TRUE(expr_equals(chain.sum * s * c, TrigRational(TrigPoly::cos("a").pow(2) +
                                                          TrigPoly::sin("a").pow(2))));
}

TEST(LayoutTest, ZeroAngleIsRejected) {
  const Figure f = make_figure("figure7");
  EXPECT_THROW(layout(f.construction, figure_assignment(f, {{"a", 0}})), LayoutError);
  EXPECT_THROW(make_figure("figure99"), DomainError);
}

// Distances recomputed from raw coordinates, independent of the checks that
// layout() performs on itself.
double raw_distance(const Layout& l, const std::string& p, const std::string& q) {
  const Point2 a = l.at(p), b = l.at(q);
  return std::hypot(a.x - b.x, a.y - b.y);
}

TEST(LayoutTest, DistanceFidelityForEveryFigure) {
  for (const std::string& name : figure_names()) {
    const Figure f = make_figure(name);
    for (int k = 0; k < 20; ++k) {
      std::map<std::string, double> degrees;
      for (const auto& angle : f.free_angles) {
        const auto [lo, hi] = f.degree_ranges.at(angle);
        // Interior grid, staggered per angle so pairs are not collinear.
        const double t = (k + 0.5 + 0.37 * degrees.size()) / 20.0;
        degrees[angle] = lo + std::fmod(t, 1.0) * (hi - lo);
      }
      const Assignment at = figure_assignment(f, degrees);
      SCOPED_TRACE(name + " sample " + std::to_string(k));
      Layout l;
      ASSERT_NO_THROW(l = layout(f.construction, at));
      for (const auto& [key, expr] : f.construction.segments()) {
        const double want = eval_numeric(expr, at);
        ASSERT_NEAR(raw_distance(l, key.first, key.second), want,
                    1e-9 * std::max(1.0, std::abs(want)))
            << key.first << key.second << " = " << expr.str();
      }
      for (const auto& mark : f.construction.right_angles()) {
        const Point2 v = l.at(mark.vertex), p = l.at(mark.ray1), q = l.at(mark.ray2);
        const double dot = (p.x - v.x) * (q.x - v.x) + (p.y - v.y) * (q.y - v.y);
        ASSERT_NEAR(dot, 0.0, 1e-9) << "right angle at " << mark.vertex;
      }
      for (const auto& t : f.construction.triangles()) {
        const double legs = std::pow(raw_distance(l, t.base(), t.right()), 2) +
                            std::pow(raw_distance(l, t.far(), t.right()), 2);
        ASSERT_NEAR(legs, std::pow(raw_distance(l, t.base(), t.far()), 2),
                    1e-9 * std::max(1.0, legs));
      }
    }
  }
}

TEST(TriangleTest, Examples) {
  const GasingTriangle t = primary_triangle({"b"}, {"A1", "C1", "F1"});
  EXPECT_TRUE(expr_equals(t.hyp, TrigRational(1)));
  EXPECT_TRUE(expr_equals(t.opp, TrigRational(TrigPoly::sin("b"))));
  EXPECT_TRUE(expr_equals(t.adj, TrigRational(TrigPoly::cos("b"))));
  Assignment at;
  at.angles["b"] = 0.7;
  EXPECT_NEAR(std::pow(eval_numeric(t.opp, at), 2) + std::pow(eval_numeric(t.adj, at), 2),
              1.0, 1e-15);
  const GasingTriangle base = primary_triangle({"a"}, {"A", "B", "C"});
  const GasingTriangle sec = scale_similar(base, ScaleFactor::of(TrigRational(1) / c));
  EXPECT_TRUE(expr_equals(sec.hyp, TrigRational(1) / c));
  EXPECT_TRUE(expr_equals(sec.opp, s / c));
  EXPECT_TRUE(expr_equals(sec.adj, TrigRational(1)));
  const GasingTriangle csc = scale_similar(base, ScaleFactor::of(TrigRational(1) / s));
  EXPECT_TRUE(expr_equals(csc.hyp, TrigRational(1) / s));
  EXPECT_TRUE(expr_equals(csc.adj, c / s));
  const GasingTriangle same = scale_similar(base, ScaleFactor::of(1));
  EXPECT_TRUE(expr_equals(same.hyp, base.hyp) && expr_equals(same.opp, base.opp) &&
              expr_equals(same.adj, base.adj));
}

TEST(ConstructionTest, GluedFigures) {
  const Construction sum = build_figure8d();
  EXPECT_TRUE(expr_equals(sum.length("F", "C"),
                          TrigRational(TrigPoly::cos("a") * TrigPoly::sin("b"))));
  const Construction c8 = build_case(8);
  EXPECT_TRUE(expr_equals(c8.length("A", "C"), TrigRational(TrigPoly(2) * TrigPoly::sin("a"))));
}

TEST(ConstructionTest, TangentSecantChains) {
  const Construction fig = build_figure7();
  const ChainEquation acd = chain_equation(fig, {"A", "C", "D"});
  EXPECT_TRUE(expr_equals(acd.whole, TrigRational(1) / c));
  EXPECT_TRUE(expr_equals(acd.sum, c + s * s / c));
  const ChainEquation dbe = chain_equation(fig, {"D", "B", "E"});
  EXPECT_TRUE(expr_equals(dbe.whole, TrigRational(1) / (s * c)));
  EXPECT_TRUE(expr_equals(dbe.sum, s / c + c / s));
  const ChainEquation two = chain_equation(fig, {"A", "B"});
  EXPECT_TRUE(expr_equals(two.whole, two.sum));

  Assignment at;
  at.angles["a"] = M_PI / 6;
  EXPECT_NEAR(eval_numeric(fig.length("C", "D"), at), 0.25 / std::cos(M_PI / 6), 1e-15);
  Rng rng(100);
  for (int i = 0; i < 100; ++i) {
    at.angles["a"] = test::uniform_real(rng, 0.01, M_PI / 2 - 0.01);
    for (const auto& chain : fig.chains()) {
      const ChainEquation eq = chain_equation(fig, chain);
      ASSERT_NEAR(eval_numeric(eq.whole, at), eval_numeric(eq.sum, at),
                  1e-12 * std::max(1.0, eval_numeric(eq.whole, at)));
    }
  }
}

}  // namespace
}  // namespace gasing
