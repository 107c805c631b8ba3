#include "gasing/figures.h"

#include <cmath>
#include <numbers>

#include "gasing/errors.h"

namespace gasing {

namespace {

TrigRational S(const std::string& angle) { return TrigPoly::sin(angle); }
TrigRational C(const std::string& angle) { return TrigPoly::cos(angle); }

GasingTriangle scaled(const std::string& angle,
                      const std::array<std::string, 3>& names,
                      const TrigRational& k) {
  return scale_similar(primary_triangle({angle}, names), ScaleFactor::of(k));
}

Gluing side(SideHint hint, bool equate = false) {
  return {std::move(hint), std::nullopt, equate};
}

Gluing along(std::string vertex, std::string reference, bool away,
             SideHint hint) {
  return {std::move(hint), RayHint{std::move(vertex), std::move(reference), away},
          false};
}

const SideHint kNone{};

Construction case1() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"E", "F", "B"}));
  c.attach(primary_triangle({"a"}, {"F", "G", "C"}),
           along("C", "B", true, SideHint::same_as("E")));
  c.attach(primary_triangle({"a"}, {"G", "H", "D"}),
           along("D", "C", true, SideHint::same_as("E")));
  c.attach(primary_triangle({"a"}, {"H", "E", "A"}), side(SideHint::opposite("F")));
  c.measure_chain({"A", "E", "B"});
  c.measure_chain({"B", "F", "C"});
  c.measure_chain({"C", "G", "D"});
  c.measure_chain({"D", "H", "A"});
  c.assert_rectangle({"A", "B", "C", "D"});
  c.assert_rectangle({"E", "F", "G", "H"});
  return c;
}

Construction case2() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"A", "B", "F"}));
  c.attach(primary_triangle({"a"}, {"B", "C", "G"}),
           along("G", "F", false, SideHint::opposite("A")));
  c.attach(primary_triangle({"a"}, {"C", "D", "H"}),
           along("H", "G", false, SideHint::opposite("B")));
  c.attach(primary_triangle({"a"}, {"D", "A", "E"}), side(SideHint::same_as("F")));
  c.measure_chain({"B", "F", "G"});
  c.measure_chain({"C", "G", "H"});
  c.measure_chain({"D", "H", "E"});
  c.measure_chain({"A", "E", "F"});
  c.assert_rectangle({"A", "B", "C", "D"});
  c.assert_rectangle({"E", "F", "G", "H"});
  return c;
}

Construction case3() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"A", "B", "C"}));
  c.attach(scaled("a", {"A", "C", "D"}, C("a")), side(SideHint::same_as("B")));
  c.attach(scaled("a", {"C", "B", "D"}, S("a")));
  c.add_chain({"A", "D", "B"});
  return c;
}

Construction case4() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"D", "A", "F"}));
  c.attach(primary_triangle({"a"}, {"E", "A", "F"}), side(SideHint::opposite("D")));
  c.attach(scaled("b", {"E", "C", "F"}, C("a") / C("b")),
           side(SideHint::opposite("A")));
  c.attach(scaled("b", {"B", "D", "F"}, C("a") / S("b")),
           side(SideHint::same_as("A")));
  c.assert_segment("A", "C", 1);
  c.assert_segment("A", "B", 1);
  c.add_chain({"C", "F", "A"});
  c.add_chain({"F", "A", "B"});
  c.add_chain({"D", "F", "E"});
  c.add_condition(SideCondition::less_than(S("a"), 1));
  return c;
}

Construction case5() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"D", "A", "F"}));
  c.attach(primary_triangle({"a"}, {"C", "A", "E"}),
           along("E", "D", false, SideHint::same_as("F")));
  c.measure_chain({"D", "E", "A"});
  const TrigRational k = (TrigRational(1) - S("a")) / C("a");
  c.attach(scaled("a", {"D", "G", "E"}, k), side(SideHint::same_as("F")));
  c.measure_chain({"A", "F", "C"});
  c.attach(scaled("a", {"C", "G", "F"}, k));
  c.add_chain({"E", "G", "C"});
  c.add_chain({"D", "G", "F"});
  return c;
}

Construction case6() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"A", "B", "C"}));
  c.attach(scaled("a", {"A", "C", "K"}, C("a")), side(SideHint::same_as("B")));
  c.attach(scaled("a", {"C", "B", "K"}, S("a")));
  c.add_chain({"A", "K", "B"});
  c.add_rectangle({"A", "B", "D", "E"}, c.length("A", "B"),
                  SideHint::opposite("C"));
  c.add_rectangle({"A", "C", "I", "H"}, c.length("A", "C"),
                  SideHint::opposite("B"));
  c.add_rectangle({"B", "C", "G", "F"}, c.length("B", "C"),
                  SideHint::opposite("A"));
  c.add_rectangle({"A", "K", "J", "E"}, std::nullopt);
  c.assert_rectangle({"K", "B", "D", "J"});
  c.add_chain({"E", "J", "D"});
  return c;
}

Construction case7() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"A", "B", "C"}));
  c.attach(primary_triangle({"a"}, {"B", "G", "H"}),
           along("H", "C", true, SideHint::same_as("A")));
  c.measure_chain({"C", "B", "H"});
  c.add_right_angle("B", "A", "G");
  return c;
}

Construction case8() {
  Construction c;
  const TrigRational s = S("a"), co = C("a");
  const TrigRational r = s / co;
  c.attach(primary_triangle({"a"}, {"B", "A", "G"}));
  c.attach(primary_triangle({"a"}, {"B", "C", "G"}), side(SideHint::opposite("A")));
  c.measure_chain({"A", "G", "C"});
  c.attach(scaled("a", {"A", "D", "C"}, 2 * r), side(SideHint::opposite("B")));
  c.attach(scaled("a", {"C", "F", "D"}, 2 * r.pow(2)),
           side(SideHint::opposite("A")));
  c.attach(scaled("a", {"D", "H", "F"}, 2 * r.pow(3)),
           side(SideHint::opposite("C")));
  c.attach(scaled("a", {"F", "I", "H"}, 2 * r.pow(4)),
           side(SideHint::opposite("D")));
  c.attach(scaled("2a", {"B", "E", "A"}, TrigRational(1) / C("2a")),
           side(SideHint::same_as("C")));
  c.add_chain({"B", "C", "F", "I", "E"});
  c.add_chain({"A", "D", "H", "E"});
  c.attach(primary_triangle({"2a"}, {"B", "C", "O"}), side(SideHint::same_as("A")));
  c.attach(scaled("a", {"C", "A", "O"}, 2 * s), side(kNone, true));
  c.add_chain({"B", "O", "A"});
  return c;
}

LinearAngle linear(std::map<std::string, Rational> coefficients,
                   Rational degrees = 0) {
  return {std::move(coefficients), std::move(degrees)};
}

}  // namespace

double LinearAngle::radians(
    const std::map<std::string, double>& angle_radians) const {
  double out = degrees.get_d() * std::numbers::pi / 180.0;
  for (const auto& [name, k] : coefficients) {
    auto it = angle_radians.find(name);
    if (it == angle_radians.end())
      throw EvaluationError("no value for angle '" + name + "'");
    out += k.get_d() * it->second;
  }
  return out;
}

std::optional<Rational> LinearAngle::exact_degrees(
    const std::map<std::string, int>& angle_degrees) const {
  Rational out = degrees;
  for (const auto& [name, k] : coefficients) {
    auto it = angle_degrees.find(name);
    if (it == angle_degrees.end()) return std::nullopt;
    out += k * it->second;
  }
  return out;
}

Construction build_figure2() {
  Construction c;
  c.attach(primary_triangle({"a"}, {"A", "B", "C"}));
  return c;
}

Construction build_figure7() {
  Construction c;
  const TrigRational s = S("a"), co = C("a");
  c.attach(primary_triangle({"a"}, {"A", "B", "C"}));
  c.attach(scaled("a", {"A", "D", "B"}, TrigRational(1) / co),
           side(SideHint::same_as("C")));
  c.attach(scaled("a", {"E", "A", "B"}, TrigRational(1) / s),
           side(SideHint::opposite("C")));
  c.attach(scaled("a", {"B", "D", "C"}, s / co));
  c.attach(scaled("a", {"E", "D", "A"}, TrigRational(1) / (s * co)));
  c.add_chain({"A", "C", "D"});
  c.add_chain({"D", "B", "E"});
  return c;
}

Construction build_figure8d() {
  Construction c;
  c.attach(scaled("b", {"A", "C", "F"}, C("a")));
  c.attach(primary_triangle({"a"}, {"A", "B", "C"}), side(SideHint::opposite("F")));
  c.attach(scaled("b", {"C", "B", "G"}, S("a")), side(SideHint::opposite("A")));
  c.attach(primary_triangle({"a+b"}, {"A", "B", "H"}), side(SideHint::same_as("F")));
  c.measure_chain({"F", "C", "G"});
  c.assert_rectangle({"H", "F", "G", "B"});
  c.add_chain({"A", "H", "F"});
  // H lies between A and F.
  c.add_condition(SideCondition::less_than(c.length("H", "F"), c.length("A", "F")));
  return c;
}

Construction build_figure8e() {
  Construction c;
  c.attach(primary_triangle({"a-b"}, {"A", "B", "C"}));
  c.attach(primary_triangle({"b"}, {"A", "B", "F"}), side(SideHint::opposite("C")));
  c.attach(scaled("a", {"A", "F", "H"}, C("b")), side(SideHint::same_as("C")));
  c.attach(scaled("a", {"B", "F", "G"}, S("b")), side(SideHint::opposite("A")));
  c.assert_rectangle({"H", "C", "G", "F"});
  c.add_chain({"C", "B", "G"});
  c.add_chain({"A", "H", "C"});
  // B lies between C and G.
  c.add_condition(SideCondition::less_than(c.length("B", "G"), c.length("C", "G")));
  return c;
}

Construction build_figure9c() {
  Construction c;
  c.attach(scaled("alpha", {"A", "B", "D"}, TrigPoly::length("c")));
  c.attach(scaled("gamma", {"C", "B", "D"}, TrigPoly::length("a")),
           side(SideHint::opposite("A"), true));
  c.measure_chain({"A", "D", "C"});
  return c;
}

Construction build_figure10() {
  Construction c = build_figure7();
  const Gluing equate = side(kNone, true);
  c.attach(primary_triangle({"g"}, {"B", "A", "C"}), equate);
  c.attach(scaled("g", {"A", "E", "B"}, TrigRational(1) / C("g")), equate);
  c.attach(scaled("g", {"D", "A", "B"}, TrigRational(1) / S("g")), equate);
  return c;
}

Construction build_case(int n) {
  switch (n) {
    case 1: return case1();
    case 2: return case2();
    case 3: return case3();
    case 4: return case4();
    case 5: return case5();
    case 6: return case6();
    case 7: return case7();
    case 8: return case8();
    default:
      throw DomainError("no case " + std::to_string(n));
  }
}

std::vector<std::string> figure_names() {
  return {"figure2", "figure7", "figure8d", "figure8e", "figure9c", "figure10",
          "case1",   "case2",   "case3",    "case4",    "case5",    "case6",
          "case7",   "case8"};
}

Figure make_figure(const std::string& name) {
  Figure f;
  f.name = name;
  const std::pair<double, double> acute{1.0, 89.0};
  auto one_angle = [&](double deg) {
    f.free_angles = {"a"};
    f.default_degrees = {{"a", deg}};
    f.degree_ranges = {{"a", acute}};
  };
  if (name == "figure2") {
    f.construction = build_figure2();
    one_angle(30);
  } else if (name == "figure7") {
    f.construction = build_figure7();
    one_angle(30);
  } else if (name == "figure8d") {
    f.construction = build_figure8d();
    f.free_angles = {"a", "b"};
    f.default_degrees = {{"a", 35}, {"b", 20}};
    f.degree_ranges = {{"a", {1, 44}}, {"b", {1, 44}}};
    f.dependent_angles = {{"a+b", linear({{"a", 1}, {"b", 1}})}};
  } else if (name == "figure8e") {
    f.construction = build_figure8e();
    f.free_angles = {"a", "b"};
    f.default_degrees = {{"a", 50}, {"b", 20}};
    f.degree_ranges = {{"a", {46, 89}}, {"b", {1, 44}}};
    f.dependent_angles = {{"a-b", linear({{"a", 1}, {"b", -1}})}};
  } else if (name == "figure9c") {
    f.construction = build_figure9c();
    f.free_angles = {"alpha", "gamma"};
    f.default_degrees = {{"alpha", 50}, {"gamma", 35}};
    f.degree_ranges = {{"alpha", {5, 85}}, {"gamma", {5, 85}}};
    f.default_lengths = {{"c", 3.0}};
    f.dependent_lengths = {
        {"a", TrigRational(TrigPoly::length("c")) * S("alpha") / S("gamma")}};
  } else if (name == "figure10") {
    f.construction = build_figure10();
    one_angle(30);
    f.dependent_angles = {{"g", linear({{"a", -1}}, 90)}};
  } else if (name.rfind("case", 0) == 0 && name.size() == 5 && name[4] >= '1' &&
             name[4] <= '8') {
    const int n = name[4] - '0';
    f.construction = build_case(n);
    one_angle(n == 8 ? 20 : 30);
    if (n == 2 || n == 8) f.degree_ranges["a"] = {1, 44};
    if (n == 4) f.dependent_angles = {{"b", linear({{"a", Rational(-1, 2)}}, 45)}};
    if (n == 8) f.dependent_angles = {{"2a", linear({{"a", 2}})}};
  } else {
    throw DomainError("unknown figure '" + name + "'");
  }
  return f;
}

Assignment figure_assignment(const Figure& f,
                             const std::map<std::string, double>& degrees,
                             const std::map<std::string, double>& lengths) {
  Assignment at;
  for (const auto& name : f.free_angles)
    at.angles[name] = f.default_degrees.at(name) * std::numbers::pi / 180.0;
  for (const auto& [name, value] : degrees) {
    if (!at.angles.count(name))
      throw DomainError("figure " + f.name + " has no free angle '" + name + "'");
    at.angles[name] = value * std::numbers::pi / 180.0;
  }
  at.lengths = f.default_lengths;
  for (const auto& [name, value] : lengths) {
    if (!at.lengths.count(name))
      throw DomainError("figure " + f.name + " has no free length '" + name + "'");
    at.lengths[name] = value;
  }
  const auto free = at.angles;
  for (const auto& [name, rule] : f.dependent_angles)
    at.angles[name] = rule.radians(free);
  for (const auto& [name, expr] : f.dependent_lengths)
    at.lengths[name] = eval_numeric(expr, at);
  return at;
}

std::optional<std::map<std::string, ExactReal>> figure_exact_values(
    const Figure& f, const std::map<std::string, int>& degrees,
    const std::map<std::string, Rational>& lengths) {
  std::map<std::string, ExactReal> out;
  std::map<std::string, int> all = degrees;
  for (const auto& name : f.free_angles) {
    if (!all.count(name)) {
      const double d = f.default_degrees.at(name);
      if (d != std::floor(d)) return std::nullopt;
      all[name] = static_cast<int>(d);
    }
  }
  for (const auto& [name, rule] : f.dependent_angles) {
    auto d = rule.exact_degrees(all);
    if (!d || d->get_den() != 1) return std::nullopt;
    all[name] = static_cast<int>(d->get_num().get_si());
  }
  for (const auto& [name, d] : all) {
    if (d != 0 && d != 30 && d != 45 && d != 60 && d != 90) return std::nullopt;
    const SpecialRatios r = special_ratios(d);
    out[Variable::sin(name).str()] = r.sin;
    out[Variable::cos(name).str()] = r.cos;
  }
  for (const auto& [name, value] : f.default_lengths) {
    auto it = lengths.find(name);
    const Rational q = it != lengths.end() ? it->second : Rational(value);
    out[Variable::length(name).str()] = q;
  }
  for (const auto& [name, expr] : f.dependent_lengths)
    out[Variable::length(name).str()] = eval_exact(expr, out);
  return out;
}

}  // namespace gasing
