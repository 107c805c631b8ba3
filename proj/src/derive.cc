#include "gasing/derive.h"

#include "gasing/errors.h"
#include "gasing/figures.h"

namespace gasing {

namespace {

TrigRational S(const std::string& angle) { return TrigPoly::sin(angle); }
TrigRational C(const std::string& angle) { return TrigPoly::cos(angle); }
TrigRational L(const std::string& name) { return TrigPoly::length(name); }

std::vector<std::string> read_triangle(DerivationTrace& trace,
                                       const GasingTriangle& t,
                                       const std::string& description,
                                       const std::string& ref) {
  const auto& n = t.labels;
  trace.define(description, ref, n[0] + n[1], t.hyp);
  trace.define(description, ref, n[1] + n[2], t.opp);
  trace.define(description, ref, n[0] + n[2], t.adj);
  return {n[0] + n[1], n[1] + n[2], n[0] + n[2]};
}

}  // namespace

std::string Formula::str() const { return name + " = " + rhs.str(); }

const Formula& Derivation::formula(const std::string& tag) const {
  for (const auto& f : formulas) {
    if (f.tag == tag) return f;
  }
  throw DomainError("no formula '" + tag + "' in " + operation);
}

TrigRational solve_linear(const Variable& v, const TrigRational& lhs,
                          const TrigRational& rhs) {
  const TrigRational d = (rhs - lhs).normalized();
  TrigPoly p, q;
  for (const auto& [m, coefficient] : d.num().terms()) {
    switch (m.degree(v)) {
      case 0:
        q += TrigPoly(m, coefficient);
        break;
      case 1:
        p += TrigPoly(TrigMonomial(v).quotient_of(m), coefficient);
        break;
      default:
        throw DomainError(v.str() + " occurs nonlinearly");
    }
  }
  if (p.is_zero()) throw DomainError(v.str() + " does not occur");
  return (TrigRational(-q) / TrigRational(p)).normalized();
}

Derivation derived_functions() {
  Derivation d{"derived-functions", {}, {}, build_figure7()};
  auto& t = d.trace;
  const GasingTriangle abc = primary_triangle({"a"}, {"A", "B", "C"});
  read_triangle(t, abc, "primary triangle ABC with hypotenuse 1",
                "figure2: AB = 1, BC = sin(a), AC = cos(a)");

  const ScaleFactor k1 = ScaleFactor::of(TrigRational(1) / C("a"));
  const GasingTriangle adb = scale_similar(primary_triangle({"a"}, {"A", "D", "B"}), k1);
  read_triangle(t, adb, "scale ABC by 1/cos(a) to obtain ADB",
                "tan-sec triangle: triangle ADB, scale factor 1/cos(a)");
  d.formulas.push_back({"tan", "tan(a)", std::nullopt, adb.opp / adb.adj, k1.conditions});
  t.define("tan(a) is the side DB opposite a in ADB, whose side AB is 1",
           "tan-sec triangle: DB = tan(a)", "tan(a)", d.formulas.back().rhs);
  d.formulas.push_back({"sec", "sec(a)", std::nullopt, adb.hyp / adb.adj, k1.conditions});
  t.define("sec(a) is the hypotenuse AD of ADB", "tan-sec triangle: AD = sec(a)", "sec(a)",
           d.formulas.back().rhs);

  const ScaleFactor k2 = ScaleFactor::of(TrigRational(1) / S("a"));
  const GasingTriangle eab = scale_similar(primary_triangle({"a"}, {"E", "A", "B"}), k2);
  read_triangle(t, eab, "scale ABC by 1/sin(a) to obtain EAB",
                "cot-csc triangle: triangle EAB, scale factor 1/sin(a)");
  d.formulas.push_back({"cot", "cot(a)", std::nullopt, eab.adj / eab.opp, k2.conditions});
  t.define("cot(a) is the side EB of EAB, whose side AB is 1", "cot-csc triangle: EB = cot(a)",
           "cot(a)", d.formulas.back().rhs);
  d.formulas.push_back({"csc", "csc(a)", std::nullopt, eab.hyp / eab.opp, k2.conditions});
  t.define("csc(a) is the hypotenuse EA of EAB", "cot-csc triangle: EA = csc(a)", "csc(a)",
           d.formulas.back().rhs);
  return d;
}

Derivation sum_formulas() {
  Derivation d{"sum", {}, {}, build_figure8d()};
  const Construction& c = d.construction;
  auto& t = d.trace;
  for (const auto& [p, q, why] :
       std::vector<std::tuple<std::string, std::string, std::string>>{
           {"A", "C", "primary triangle ABC"},
           {"A", "F", "ACF is the primary b-triangle scaled by cos(a)"},
           {"F", "C", "ACF is the primary b-triangle scaled by cos(a)"},
           {"C", "G", "CBG is the primary b-triangle scaled by sin(a)"},
           {"B", "G", "CBG is the primary b-triangle scaled by sin(a)"},
           {"A", "H", "ABH is the primary triangle of angle a+b"},
           {"H", "B", "ABH is the primary triangle of angle a+b"}}) {
    t.define(why, "figure8d: side " + p + q, p + q, c.length(p, q));
  }
  const ChainEquation fcg = chain_equation(c, {"F", "C", "G"});
  t.define("F, C, G are collinear", "figure8d: FG = FC + CG", "FG", fcg.whole);
  t.add("HB and FG are opposite sides of rectangle HFGB",
        "figure8d: HB = FC + CG", c.length("H", "B"), c.length("F", "G"));
  d.formulas.push_back({"sin-sum", "sin(a+b)", S("a+b"),
                        solve_linear(Variable::sin("a+b"), t.back().lhs, t.back().rhs),
                        c.conditions()});

  const ChainEquation ahf = chain_equation(c, {"A", "H", "F"});
  t.define("HF and GB are opposite sides of rectangle HFGB", "figure8d: HF = GB", "HF",
           c.length("H", "F"));
  t.add("A, H, F are collinear", "figure8d: AH = AF - HF", ahf.sum, ahf.whole);
  d.formulas.push_back({"cos-sum", "cos(a+b)", C("a+b"),
                        solve_linear(Variable::cos("a+b"), t.back().lhs, t.back().rhs),
                        c.conditions()});
  t.define("solve for AH", "figure8d: AH = AF - HF", "cos(a+b)", d.formulas.back().rhs);
  return d;
}

Derivation difference_formulas() {
  Derivation d{"difference", {}, {}, build_figure8e()};
  const Construction& c = d.construction;
  auto& t = d.trace;
  for (const auto& [p, q, why] :
       std::vector<std::tuple<std::string, std::string, std::string>>{
           {"A", "C", "ABC is the primary triangle of angle a-b"},
           {"C", "B", "ABC is the primary triangle of angle a-b"},
           {"A", "F", "primary b-triangle ABF"},
           {"F", "B", "primary b-triangle ABF"},
           {"A", "H", "AFH is the primary a-triangle scaled by cos(b)"},
           {"F", "H", "AFH is the primary a-triangle scaled by cos(b)"},
           {"B", "G", "BFG is the primary a-triangle scaled by sin(b)"},
           {"F", "G", "BFG is the primary a-triangle scaled by sin(b)"}}) {
    t.define(why, "figure8e: side " + p + q, p + q, c.length(p, q));
  }
  t.define("CG and HF are opposite sides of rectangle HCGF", "figure8e: CG = HF", "CG",
           c.length("C", "G"));
  t.define("HC and FG are opposite sides of rectangle HCGF", "figure8e: HC = FG", "HC",
           c.length("H", "C"));
  const ChainEquation cbg = chain_equation(c, {"C", "B", "G"});
  t.add("C, B, G are collinear", "figure8e: CB = HF - BG", cbg.sum, cbg.whole);
  const TrigRational sin_diff =
      solve_linear(Variable::sin("a-b"), t.back().lhs, t.back().rhs);
  d.formulas.push_back({"sin-difference", "sin(a-b)", S("a-b"), sin_diff, c.conditions()});
  const ChainEquation ahc = chain_equation(c, {"A", "H", "C"});
  t.add("A, H, C are collinear", "figure8e: AC = AH + HC", ahc.whole, ahc.sum);
  const TrigRational cos_diff =
      solve_linear(Variable::cos("a-b"), t.back().lhs, t.back().rhs);
  d.formulas.push_back({"cos-difference", "cos(a-b)", C("a-b"), cos_diff, c.conditions()});

  // Second route: b -> -b in the sum formulas, with sin odd and cos even.
  const Derivation sum = sum_formulas();
  const std::map<std::string, TrigPoly> negate_b{{"sin(b)", -TrigPoly::sin("b")},
                                                 {"cos(b)", TrigPoly::cos("b")}};
  for (const auto& [tag, target, mine] :
       std::vector<std::tuple<std::string, TrigRational, TrigRational>>{
           {"sin-sum", S("a-b"), sin_diff}, {"cos-sum", C("a-b"), cos_diff}}) {
    const TrigRational& r = sum.formula(tag).rhs;
    const TrigRational other(r.num().substitute(negate_b), r.den().substitute(negate_b));
    t.add("substitute b -> -b into " + sum.formula(tag).name +
              " using sin(-b) = -sin(b), cos(-b) = cos(b)",
          "quadrant 4 projection with reference b", target, other);
    if (!expr_equals(other, mine)) {
      throw VerificationError("difference formula routes disagree: " + mine.str() +
                              " vs " + other.str());
    }
  }
  return d;
}

Derivation double_angle() {
  Derivation d{"double-angle", {}, {}, build_figure8d()};
  const Derivation sum = sum_formulas();
  auto& t = d.trace;
  const std::map<std::string, TrigPoly> b_to_a{{"sin(b)", TrigPoly::sin("a")},
                                               {"cos(b)", TrigPoly::cos("a")}};
  auto at_b_equals_a = [&](const TrigRational& r) {
    return TrigRational(r.num().substitute(b_to_a), r.den().substitute(b_to_a))
        .normalized();
  };
  const TrigRational sin2 = at_b_equals_a(sum.formula("sin-sum").rhs);
  t.add("set b = a in sin(a+b)", "figure8d: HB = FC + CG with b = a", S("2a"), sin2);
  d.formulas.push_back({"sin-double", "sin(2a)", S("2a"), sin2, {}});
  const TrigRational cos2 = at_b_equals_a(sum.formula("cos-sum").rhs);
  t.add("set b = a in cos(a+b)", "figure8d: AH = AF - HF with b = a", C("2a"), cos2);
  d.formulas.push_back({"cos-double", "cos(2a)", C("2a"), cos2, {}});

  const TrigPoly cos_form = TrigPoly(2) * TrigPoly::cos("a").pow(2) - TrigPoly(1);
  if (!membership_certificate(cos2.num() - cos_form))
    throw VerificationError("cos(2a) does not reduce to 2cos(a)^2 - 1");
  t.add("replace sin(a)^2 by 1 - cos(a)^2 (Pythagorean identity)",
        "cos(a)^2 + sin(a)^2 = 1 applied to cos(2a)", C("2a"), cos_form, true);
  d.formulas.push_back({"cos-double-cos", "cos(2a)", C("2a"), cos_form, {}});

  const Reduction r = ideal_reduce(cos2.num());
  t.add("replace cos(a)^2 by 1 - sin(a)^2 (Pythagorean identity)",
        "cos(a)^2 + sin(a)^2 = 1 applied to cos(2a)", C("2a"), r.remainder, true);
  d.formulas.push_back({"cos-double-sin", "cos(2a)", C("2a"), r.remainder, {}});
  return d;
}

Derivation sine_rule() {
  Derivation d{"sine-rule", {}, {}, build_figure9c()};
  const Construction& c = d.construction;
  auto& t = d.trace;
  t.define("ABD is the primary alpha-triangle scaled by c", "figure9c: triangle ABD",
           "DB", c.length("D", "B"));
  const ImposedEquation& db = c.equations().at(0);
  t.define("CBD is the primary gamma-triangle scaled by a", "figure9c: triangle CBD",
           "DB", db.lhs);
  const std::size_t shared =
      t.add("both triangles measure the shared altitude DB",
            "figure9c: DB = c sin(alpha) = a sin(gamma)", db.rhs, db.lhs);
  ConditionSet conditions;
  const TrigRational k = TrigRational(-1) /
                         poly_arith(S("alpha"), S("gamma"), ArithOp::Mul, &conditions);
  require_nonzero(S("alpha") * S("gamma"), conditions);
  const TrigRational lhs = L("a") / S("alpha");
  const TrigRational rhs = L("c") / S("gamma");
  t.derive("divide by sin(alpha) sin(gamma)", "figure9c: sine rule", lhs, rhs,
           {{shared, k}});
  d.formulas.push_back({"sine-rule", "a/sin(alpha)", lhs, rhs, conditions});
  return d;
}

Derivation cosine_rule() {
  Derivation d{"cosine-rule", {}, {}, build_figure9c()};
  const Construction& c = d.construction;
  auto& t = d.trace;
  const ChainEquation adc = chain_equation(c, {"A", "D", "C"});
  t.add("A, D, C are collinear; call AC = b", "figure9c: b = AD + DC", L("b"), adc.sum);
  const TrigRational dc = c.length("D", "C");
  const TrigRational db_gamma = c.equations().at(0).lhs;
  const TrigRational a_squared = L("a").pow(2);
  const TrigRational hyp_rule = dc.pow(2) + db_gamma.pow(2);
  if (!membership_certificate(hyp_rule.num() - a_squared.num()))
    throw VerificationError("right-triangle relation on CBD does not hold");
  t.add("right-triangle relation on CBD: CB^2 = DC^2 + DB^2",
        "figure9c: CB^2 = DC^2 + DB^2", a_squared, hyp_rule, true);

  const TrigRational dc_from_b = L("b") - L("c") * C("alpha");
  const TrigRational eq24 = dc_from_b.pow(2) + (L("c") * S("alpha")).pow(2);
  t.add("substitute DC = b - c cos(alpha) and DB = c sin(alpha)",
        "figure9c: a^2 = (b - c cos(alpha))^2 + c^2 sin(alpha)^2", a_squared, eq24);
  t.add("expand; c^2 multiplies cos(alpha)^2 + sin(alpha)^2",
        "a^2 = b^2 + c^2 (cos(alpha)^2 + sin(alpha)^2) - 2bc cos(alpha)", a_squared,
        eq24);
  const Reduction r = ideal_reduce(eq24.num());
  t.add("apply cos(alpha)^2 + sin(alpha)^2 = 1", "cosine rule", a_squared,
        r.remainder, true);
  d.formulas.push_back({"cosine-rule", "a^2", a_squared, r.remainder, {}});
  return d;
}

Derivation cofunction() {
  Derivation d{"cofunction", {}, {}, build_figure10()};
  const Construction& c = d.construction;
  auto& t = d.trace;
  struct Row {
    std::string segment, tag, name, gamma_side;
  };
  const std::vector<Row> rows{
      {"BC", "cofunction-cos", "cos(g)", "BC is adjacent to g in ABC"},
      {"AC", "cofunction-sin", "sin(g)", "AC is opposite g in ABC"},
      {"AE", "cofunction-sec", "sec(g)", "AE is the hypotenuse of EAB seen from g"},
      {"DA", "cofunction-csc", "csc(g)", "DA is the hypotenuse of ADB seen from g"},
      {"EB", "cofunction-tan", "tan(g)", "EB is opposite g in EAB, whose AB is 1"},
      {"DB", "cofunction-cot", "cot(g)", "DB is adjacent to g in ADB, whose AB is 1"}};
  for (const auto& row : rows) {
    const ImposedEquation* found = nullptr;
    for (const auto& e : c.equations()) {
      if (e.description == row.segment) found = &e;
    }
    if (found == nullptr) throw VerificationError("figure10 lacks " + row.segment);
    t.add(row.gamma_side + " (angle g = 90deg - a at the complementary vertex)",
          "figure10: " + row.segment + " read with a and with g", found->lhs,
          found->rhs);
    d.formulas.push_back({row.tag, row.name, found->lhs, found->rhs, {}});
  }
  return d;
}

// --- Quadrants ---------------------------------------------------------------

std::string Angle::str() const {
  if (const auto* s = std::get_if<AngleSymbol>(&reference)) {
    switch (quadrant) {
      case 1: return s->name;
      case 2: return "180deg-" + s->name;
      case 3: return "180deg+" + s->name;
      case 4: return "360deg-" + s->name;
    }
    return s->name;
  }
  const int r = std::get<int>(reference);
  const int theta = quadrant == 1 ? r : quadrant == 2 ? 180 - r
                                      : quadrant == 3 ? 180 + r : 360 - r;
  return std::to_string(theta) + "deg";
}

SignedPair quadrant_signed(const Angle& angle) {
  if (angle.quadrant < 1 || angle.quadrant > 4)
    throw DomainError("quadrant must be 1..4");
  SignedPair out;
  std::string ref_text;
  if (const auto* s = std::get_if<AngleSymbol>(&angle.reference)) {
    out.cos = C(s->name);
    out.sin = S(s->name);
    ref_text = s->name;
  } else {
    const int r = std::get<int>(angle.reference);
    if (r < 0 || r > 90) throw DomainError("reference angle must lie in [0, 90]");
    const SpecialRatios v = special_ratios(r);
    out.cos = v.cos;
    out.sin = v.sin;
    ref_text = std::to_string(r) + "deg";
  }
  auto& t = out.trace;
  t.define("primary triangle on the axes, AC along the x-axis: B = (cos, sin)",
           "unit vector: B = (cos(a), sin(a))", "x(B)", out.cos);
  t.define("primary triangle on the axes, AC along the x-axis: B = (cos, sin)",
           "unit vector: B = (cos(a), sin(a))", "y(B)", out.sin);
  const bool flip_x = angle.quadrant == 2 || angle.quadrant == 3;
  const bool flip_y = angle.quadrant == 3 || angle.quadrant == 4;
  static const char* const kWhere[] = {
      "",
      "unit vector AB at theta = " ,
      "unit vector AB rotated to theta = ",
      "unit vector AB rotated to theta = ",
      "unit vector AB rotated to theta = "};
  std::string description = std::string(kWhere[angle.quadrant]) + angle.str() + ": ";
  description += flip_x ? "the x-projection has length cos(" + ref_text +
                              ") and points along the negative x-axis"
                        : "the x-projection has length cos(" + ref_text +
                              ") along the positive x-axis";
  if (flip_x) out.cos = -out.cos;
  if (flip_y) out.sin = -out.sin;
  t.define(description, "unit vector: x-projection of the unit vector",
           "cos(" + angle.str() + ")", out.cos);
  t.define(flip_y ? "the y-projection has length sin(" + ref_text +
                        ") and points along the negative y-axis"
                  : "the y-projection has length sin(" + ref_text +
                        ") along the positive y-axis",
           "unit vector: y-projection of the unit vector", "sin(" + angle.str() + ")",
           out.sin);
  return out;
}

Derivation quadrant_table() {
  Derivation d{"quadrant", {}, {}, build_figure2()};
  for (int q = 1; q <= 4; ++q) {
    const Angle theta = Angle::symbolic("a", q);
    SignedPair p = quadrant_signed(theta);
    d.trace.append(p.trace);
    const std::string suffix = "q" + std::to_string(q);
    d.formulas.push_back({"cos-" + suffix, "cos(" + theta.str() + ")", std::nullopt,
                          p.cos, {}});
    d.formulas.push_back({"sin-" + suffix, "sin(" + theta.str() + ")", std::nullopt,
                          p.sin, {}});
  }
  return d;
}

DegreeDecomposition decompose_degrees(int degrees) {
  const int d = ((degrees % 360) + 360) % 360;
  if (d <= 90) return {1, d};
  if (d <= 180) return {2, 180 - d};
  if (d <= 270) return {3, d - 180};
  return {4, 360 - d};
}

ExactReal special_value(const std::string& fn, int degrees) {
  const SpecialRatios r = special_ratios(degrees);
  auto ratio = [&](const ExactReal& num, const ExactReal& den) {
    if (den.is_zero())
      throw DomainError(fn + " is undefined at " + std::to_string(degrees) +
                        " degrees");
    return num / den;
  };
  if (fn == "sin") return r.sin;
  if (fn == "cos") return r.cos;
  if (fn == "tan") return ratio(r.sin, r.cos);
  if (fn == "sec") return ratio(1, r.cos);
  if (fn == "csc") return ratio(1, r.sin);
  if (fn == "cot") return ratio(r.cos, r.sin);
  throw DomainError("unknown function '" + fn + "'");
}

SpecialRatios exact_ratios(int degrees) {
  const DegreeDecomposition dd = decompose_degrees(degrees);
  const SignedPair p = quadrant_signed(Angle::special(dd.reference, dd.quadrant));
  return {*p.sin.num().constant_value(), *p.cos.num().constant_value()};
}

std::vector<std::string> derivation_names() {
  return {"derived-functions", "sum",        "difference", "double-angle",
          "sine-rule",         "cosine-rule", "cofunction", "quadrant"};
}

Derivation derive_by_name(const std::string& name) {
  if (name == "derived-functions") return derived_functions();
  if (name == "sum") return sum_formulas();
  if (name == "difference") return difference_formulas();
  if (name == "double-angle") return double_angle();
  if (name == "sine-rule") return sine_rule();
  if (name == "cosine-rule") return cosine_rule();
  if (name == "cofunction") return cofunction();
  if (name == "quadrant") return quadrant_table();
  throw DomainError("unknown derivation '" + name + "'");
}

}  // namespace gasing
