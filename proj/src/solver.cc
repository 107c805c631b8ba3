#include "gasing/solver.h"

#include <cmath>
#include <cstdio>
#include <set>

#include "gasing/derive.h"
#include "gasing/errors.h"

namespace gasing {

namespace {

std::string deg(int d) { return std::to_string(d) + "deg"; }

void require_solver_angle(int degrees) {
  if (!is_solver_angle(degrees))
    throw UnsupportedError("angle " + deg(degrees) +
                           " has no exact trig values; use 30, 45, 60, 90, 120, "
                           "135 or 150 degrees");
}

void require_acute(int degrees) {
  require_solver_angle(degrees);
  if (degrees >= 90) throw DomainError("angle " + deg(degrees) + " must be acute");
}

void require_positive(const ExactReal& v, const std::string& what) {
  if (v.sign() <= 0) throw DomainError(what + " must be positive");
}

void fill_numeric(Solution& s) {
  const RationalInterval box = enclose(s.value, 128);
  double lo = box.lo.get_d();
  double hi = box.hi.get_d();
  if (s.is_squared) {
    lo = std::sqrt(std::max(lo, 0.0));
    hi = std::sqrt(std::max(hi, 0.0));
  }
  s.enclosure = {std::nextafter(lo, -INFINITY), std::nextafter(hi, INFINITY)};
  s.approximation = s.is_squared ? std::sqrt(to_float(s.value)) : to_float(s.value);
}

// Takes the square root when it stays in the number domain; otherwise keeps
// the square and marks the solution.
void settle_root(Solution& s, const ExactReal& square) {
  if (auto root = try_sqrt(square)) {
    s.value = *root;
    s.trace.define("take the positive square root", "right-triangle relation",
                   s.quantity, s.value);
  } else {
    s.value = square;
    s.is_squared = true;
    s.trace.define("the root needs a nested radical; the square is exact",
                   "right-triangle relation", s.quantity + "^2", s.value);
  }
  fill_numeric(s);
}

ExactReal sin_of(int degrees) { return exact_ratios(degrees).sin; }
ExactReal cos_of(int degrees) { return exact_ratios(degrees).cos; }

ExactReal sqrt_or_throw(const ExactReal& v, const std::string& what) {
  auto r = try_sqrt(v);
  if (!r) throw UnsupportedError(what + " needs a nested radical");
  return *r;
}

}  // namespace

std::string Solution::str() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", approximation);
  if (is_squared) {
    return quantity + "^2 = " + value.str() + ", " + quantity + " ≈ " + buf +
           " (not a denested radical)";
  }
  return value.str() + " ≈ " + buf;
}

bool is_solver_angle(int degrees) {
  static const std::set<int> allowed{30, 45, 60, 90, 120, 135, 150};
  return allowed.contains(degrees);
}

Solution solve_ratio(const std::string& given_fn, const ExactReal& v,
                     const std::string& want_fn) {
  static const std::set<std::string> fns{"sin", "cos", "tan", "sec", "csc", "cot"};
  if (!fns.contains(given_fn)) throw DomainError("unknown function '" + given_fn + "'");
  if (!fns.contains(want_fn)) throw DomainError("unknown function '" + want_fn + "'");
  const std::string given_text = given_fn + "(a) = " + v.str();
  auto out_of_range = [&](const std::string& range) {
    return DomainError(given_text + " is outside " + range + " for an acute angle");
  };

  Solution s;
  s.problem = "ratio";
  s.quantity = want_fn + "(a)";
  auto& t = s.trace;
  ExactReal hyp, opp, adj;
  const std::string rel = "right-triangle relation (certified in the main proof)";
  if (given_fn == "sin" || given_fn == "cos") {
    if (v.sign() < 0 || compare(v, 1) > 0) throw out_of_range("[0, 1]");
    const ExactReal other = sqrt_or_throw(ExactReal(1) - v * v, "the missing side");
    hyp = 1;
    opp = given_fn == "sin" ? v : other;
    adj = given_fn == "sin" ? other : v;
    t.define("primary triangle ABC with AB = 1 and " +
                 std::string(given_fn == "sin" ? "BC" : "AC") + " = " + v.str(),
             "figure2: BC = sin(a), AC = cos(a)", given_fn == "sin" ? "BC" : "AC", v);
    t.define("missing leg from AB^2 = BC^2 + AC^2", rel,
             given_fn == "sin" ? "AC" : "BC", other);
  } else if (given_fn == "tan" || given_fn == "cot") {
    if (v.sign() < 0) throw out_of_range("[0, inf)");
    const ExactReal h = sqrt_or_throw(ExactReal(1) + v * v, "the hypotenuse");
    hyp = h;
    opp = given_fn == "tan" ? v : ExactReal(1);
    adj = given_fn == "tan" ? ExactReal(1) : v;
    const std::string k = given_fn == "tan" ? "1/cos(a)" : "1/sin(a)";
    t.define("scale ABC by " + k + " so the unit leg is " +
                 std::string(given_fn == "tan" ? "A'C'" : "B'C'"),
             given_fn == "tan" ? "tan-sec triangle: B'C' = tan(a)" : "cot-csc triangle: A'C' = cot(a)",
             given_fn == "tan" ? "B'C'" : "A'C'", v);
    t.define("hypotenuse from A'B'^2 = A'C'^2 + B'C'^2", rel, "A'B'", h);
  } else {
    if (compare(v, 1) < 0) throw out_of_range("[1, inf)");
    const ExactReal leg = sqrt_or_throw(v * v - ExactReal(1), "the missing leg");
    hyp = v;
    opp = given_fn == "sec" ? leg : ExactReal(1);
    adj = given_fn == "sec" ? ExactReal(1) : leg;
    const std::string k = given_fn == "sec" ? "1/cos(a)" : "1/sin(a)";
    t.define("scale ABC by " + k + " so the hypotenuse A'B' is " + v.str(),
             given_fn == "sec" ? "tan-sec triangle: A'B' = sec(a)" : "cot-csc triangle: A'B' = csc(a)",
             "A'B'", v);
    t.define("missing leg from A'B'^2 = A'C'^2 + B'C'^2", rel,
             given_fn == "sec" ? "B'C'" : "A'C'", leg);
  }
  auto ratio = [&](const ExactReal& num, const ExactReal& den) {
    if (den.is_zero())
      throw DomainError(want_fn + "(a) is undefined when " + given_text);
    return num / den;
  };
  if (want_fn == "sin") s.value = ratio(opp, hyp);
  if (want_fn == "cos") s.value = ratio(adj, hyp);
  if (want_fn == "tan") s.value = ratio(opp, adj);
  if (want_fn == "cot") s.value = ratio(adj, opp);
  if (want_fn == "sec") s.value = ratio(hyp, adj);
  if (want_fn == "csc") s.value = ratio(hyp, opp);
  t.define("read " + want_fn + "(a) as a side ratio of the scaled triangle",
           "similar triangles keep side ratios", s.quantity, s.value);
  fill_numeric(s);
  if (!opp.is_zero() && !adj.is_zero()) {
    s.construction.attach(triangle_from_sides({"a"}, {"A", "B", "C"}, hyp, opp, adj));
  }
  return s;
}

Solution solve_asa_shared_altitude(int angle_left, int angle_right,
                                   const ExactReal& side_right) {
  require_acute(angle_left);
  require_acute(angle_right);
  require_positive(side_right, "side ML");
  Solution s;
  s.problem = "asa";
  s.quantity = "a";
  auto& t = s.trace;
  const ExactReal sl = sin_of(angle_left);
  const ExactReal sr = sin_of(angle_right);
  t.define("primary triangle of angle " + deg(angle_left) + " scaled by a gives KLN",
           "triangle KLN: LN = a sin(" + deg(angle_left) + ")", "sin(" + deg(angle_left) + ")",
           sl);
  t.define("primary triangle of angle " + deg(angle_right) + " scaled by " +
               side_right.str() + " gives MLN",
           "triangle MLN: LN = " + side_right.str() + " sin(" + deg(angle_right) + ")", "LN",
           side_right * sr);
  const TrigRational a = TrigPoly::length("a");
  t.add("both triangles measure the shared altitude LN", "shared altitude LN",
        a * TrigRational(sl), TrigRational(side_right * sr));
  s.value = side_right * sr / sl;
  t.define("divide by sin(" + deg(angle_left) + ")", "shared altitude LN", "a", s.value);
  fill_numeric(s);

  Construction& c = s.construction;
  c.attach(scale_similar(special_triangle(angle_left, {"K", "L", "N"}),
                         ScaleFactor::of(TrigRational(s.value))));
  c.attach(scale_similar(special_triangle(angle_right, {"M", "L", "N"}),
                         ScaleFactor::of(TrigRational(side_right))),
           Gluing{SideHint::opposite("K"), std::nullopt, false});
  c.add_chain({"K", "N", "M"});
  return s;
}

Solution solve_sas_obtuse(const ExactReal& side_b, const ExactReal& side_d,
                          int obtuse_degrees) {
  require_solver_angle(obtuse_degrees);
  if (obtuse_degrees <= 90 || obtuse_degrees >= 180)
    throw DomainError("angle " + deg(obtuse_degrees) + " is not obtuse");
  if (side_b.sign() < 0) throw DomainError("side KM must not be negative");
  require_positive(side_d, "side ML");
  const int phi = 180 - obtuse_degrees;
  Solution s;
  s.problem = "sas-obtuse";
  s.quantity = "a";
  auto& t = s.trace;
  const ExactReal kn = side_b + side_d * cos_of(phi);
  const ExactReal ln = side_d * sin_of(phi);
  t.define("primary triangle of angle 180deg - " + deg(obtuse_degrees) + " = " + deg(phi) +
               " scaled by " + side_d.str() + " gives MLN beyond M",
           "triangle MLN: MN = " + side_d.str() + " cos(" + deg(phi) + ")", "MN",
           side_d * cos_of(phi));
  t.define("KN = KM + MN", "K, M, N are collinear", "KN", kn);
  t.define("LN = " + side_d.str() + " sin(" + deg(phi) + ")", "triangle MLN", "LN", ln);
  const ExactReal square = kn * kn + ln * ln;
  t.add("right-triangle relation on KLN", "KL^2 = KN^2 + LN^2",
        TrigRational(TrigPoly::length("a")).pow(2), TrigRational(square));
  settle_root(s, square);

  Construction& c = s.construction;
  c.attach(scale_similar(special_triangle(phi, {"M", "L", "N"}),
                         ScaleFactor::of(TrigRational(side_d))));
  if (!side_b.is_zero()) {
    c.add_point_on_ray("K", "M", "N", true, TrigRational(side_b));
    c.measure_chain({"K", "M", "N"});
    if (!s.is_squared) c.assert_segment("K", "L", TrigRational(s.value));
  }
  return s;
}

Solution solve_two_sightlines(const ExactReal& pole_height, int upper_degrees,
                              int lower_degrees) {
  require_acute(upper_degrees);
  require_acute(lower_degrees);
  require_positive(pole_height, "pole height");
  if (upper_degrees == lower_degrees)
    throw DomainError("equal sight angles give a pole of zero height");
  if (upper_degrees < lower_degrees)
    throw DomainError("the upper sight angle must exceed the lower one");
  Solution s;
  s.problem = "sightlines";
  s.quantity = "CD";
  auto& t = s.trace;
  const ExactReal tu = special_value("tan", upper_degrees);
  const ExactReal tl = special_value("tan", lower_degrees);
  const TrigRational x = TrigPoly::length("x");
  t.define("scale the " + deg(upper_degrees) + " triangle by x/cos(" + deg(upper_degrees) +
               ") so AC = x",
           "triangle ACB: CB = x tan(" + deg(upper_degrees) + ")", "CB", x * TrigRational(tu));
  t.define("scale the " + deg(lower_degrees) + " triangle by x/cos(" + deg(lower_degrees) +
               ") so AC = x",
           "triangle ACD: CD = x tan(" + deg(lower_degrees) + ")", "CD", x * TrigRational(tl));
  t.add("DB = CB - CD", "C, D, B are collinear", TrigRational(pole_height),
        x * TrigRational(tu - tl));
  const ExactReal xv = pole_height / (tu - tl);
  t.define("solve for the common horizontal side", "AC = x", "x", xv);
  s.value = xv * tl;
  t.define("height of the hill", "CD = x tan(" + deg(lower_degrees) + ")", "CD", s.value);
  fill_numeric(s);

  Construction& c = s.construction;
  const TrigRational xr(xv);
  c.attach(scale_similar(special_triangle(lower_degrees, {"A", "D", "C"}),
                         ScaleFactor::of(xr / TrigRational(cos_of(lower_degrees)))));
  c.attach(scale_similar(special_triangle(upper_degrees, {"A", "B", "C"}),
                         ScaleFactor::of(xr / TrigRational(cos_of(upper_degrees)))),
           Gluing{SideHint::same_as("D"), std::nullopt, false});
  c.measure_chain({"C", "D", "B"});
  return s;
}

Solution solve_sine_rule(int alpha, int gamma, const ExactReal& c_side) {
  require_solver_angle(alpha);
  require_solver_angle(gamma);
  if (alpha + gamma >= 180) throw DomainError("the two angles leave no third angle");
  require_positive(c_side, "side c");
  Solution s;
  s.problem = "sine-rule";
  s.quantity = "a";
  const Derivation rule = sine_rule();
  const Formula& f = rule.formula("sine-rule");
  const TrigRational a_expr = solve_linear(Variable::length("a"), *f.lhs, f.rhs);
  s.trace.add("sine rule", "a/sin(alpha) = c/sin(gamma)", *f.lhs, f.rhs);
  s.trace.define("solve for a", "sine rule", "a", a_expr);
  s.value = eval_exact(a_expr, {{"sin(alpha)", sin_of(alpha)},
                                {"sin(gamma)", sin_of(gamma)},
                                {"c", c_side}});
  s.trace.define("substitute alpha = " + deg(alpha) + ", gamma = " + deg(gamma) +
                     ", c = " + c_side.str(),
                 "special values", "a", s.value);
  fill_numeric(s);
  if (alpha < 90 && gamma < 90) {
    Construction& c = s.construction;
    c.attach(scale_similar(special_triangle(alpha, {"A", "B", "D"}),
                           ScaleFactor::of(TrigRational(c_side))));
    c.attach(scale_similar(special_triangle(gamma, {"C", "B", "D"}),
                           ScaleFactor::of(TrigRational(s.value))),
             Gluing{SideHint::opposite("A"), std::nullopt, false});
    c.add_chain({"A", "D", "C"});
  }
  return s;
}

Solution solve_cosine_rule(const ExactReal& b, const ExactReal& c_side, int alpha) {
  require_solver_angle(alpha);
  require_positive(b, "side b");
  require_positive(c_side, "side c");
  Solution s;
  s.problem = "cosine-rule";
  s.quantity = "a";
  const Derivation rule = cosine_rule();
  const Formula& f = rule.formula("cosine-rule");
  s.trace.add("cosine rule", "a^2 = b^2 + c^2 - 2bc cos(alpha)", *f.lhs, f.rhs);
  const ExactReal square =
      eval_exact(f.rhs, {{"cos(alpha)", cos_of(alpha)}, {"b", b}, {"c", c_side}});
  s.trace.define("substitute alpha = " + deg(alpha) + ", b = " + b.str() + ", c = " +
                     c_side.str(),
                 "special values", "a^2", square);
  settle_root(s, square);

  const ExactReal foot = c_side * cos_of(alpha);
  if (alpha != 90 && foot != b) {
    Construction& c = s.construction;
    const int phi = alpha < 90 ? alpha : 180 - alpha;
    c.attach(scale_similar(special_triangle(phi, {"A", "B", "D"}),
                           ScaleFactor::of(TrigRational(c_side))));
    c.add_point_on_ray("C", "A", "D", alpha > 90, TrigRational(b));
    if (!s.is_squared) c.assert_segment("B", "C", TrigRational(s.value));
  }
  return s;
}

Solution solve(const ProblemInstance& p) {
  auto value = [&](const std::string& k) {
    auto it = p.values.find(k);
    if (it == p.values.end()) throw DomainError("missing given '" + k + "'");
    return it->second;
  };
  auto angle = [&](const std::string& k) {
    auto it = p.angles.find(k);
    if (it == p.angles.end()) throw DomainError("missing given angle '" + k + "'");
    return it->second;
  };
  auto fn = [&](const std::string& k) {
    auto it = p.functions.find(k);
    if (it == p.functions.end()) throw DomainError("missing function '" + k + "'");
    return it->second;
  };
  switch (p.kind) {
    case ProblemKind::RatioConversion:
      return solve_ratio(fn("given"), value("given"), fn("want"));
    case ProblemKind::AsaSharedAltitude:
      return solve_asa_shared_altitude(angle("left"), angle("right"), value("side"));
    case ProblemKind::SasObtuse:
      return solve_sas_obtuse(value("b"), value("d"), angle("angle"));
    case ProblemKind::TwoSightlines:
      return solve_two_sightlines(value("pole"), angle("upper"), angle("lower"));
    case ProblemKind::GenericSineRule:
      return solve_sine_rule(angle("alpha"), angle("gamma"), value("c"));
    case ProblemKind::GenericCosineRule:
      return solve_cosine_rule(value("b"), value("c"), angle("alpha"));
  }
  throw DomainError("unknown problem kind");
}

}  // namespace gasing
