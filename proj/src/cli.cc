#include "gasing/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>

#include "gasing/derive.h"
#include "gasing/errors.h"
#include "gasing/figures.h"
#include "gasing/parse.h"
#include "gasing/proofs.h"
#include "gasing/solver.h"
#include "gasing/svg.h"
#include "gasing/trace_json.h"

namespace gasing {

namespace {

struct Globals {
  bool json = false;
  bool trace = false;
};

std::string approx(double v, const char* format = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

void print_steps(std::ostream& out, const DerivationTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    out << "  " << i + 1 << ". " << s.description << "  [" << s.ref << "]\n";
    out << "       " << s.lhs_text() << " = " << s.rhs.str();
    if (!s.combination.empty()) {
      out << "   (from";
      for (const auto& [j, k] : s.combination) out << " " << j + 1;
      out << ")";
    }
    if (s.identity_dependent) out << "   (uses the identity)";
    out << "\n";
  }
}

void print_conditions(std::ostream& out, const ConditionSet& c, const std::string& indent) {
  if (c.empty()) return;
  out << indent << "conditions:";
  bool first = true;
  for (const auto& x : c) {
    out << (first ? " " : "; ") << x.str();
    first = false;
  }
  out << "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

std::pair<std::string, std::string> split_binding(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
    throw DomainError("expected name=value, got '" + text + "'");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

int angle_arg(const std::string& text) { return parse_degrees(text); }

int cmd_derive(const std::string& name, const Globals& g, std::ostream& out) {
  const Derivation d = derive_by_name(name);
  if (g.json) {
    out << dump(to_json(d));
    return 0;
  }
  out << "derive " << d.operation << "\n";
  for (const auto& f : d.formulas) {
    out << "  " << f.str() << "\n";
    print_conditions(out, f.conditions, "    ");
  }
  if (g.trace) {
    out << "steps:\n";
    print_steps(out, d.trace);
  }
  return 0;
}

int cmd_prove(const std::string& name, const Globals& g, std::ostream& out) {
  const std::vector<ProofCertificate> certs = prove_by_name(name);
  const bool all_ok = std::all_of(certs.begin(), certs.end(),
                                  [](const ProofCertificate& c) { return c.verified; });
  if (g.json) {
    if (certs.size() == 1) {
      out << dump(to_json(certs.front()));
    } else {
      Json arr = Json::array();
      for (const auto& c : certs) arr.push_back(to_json(c));
      out << dump(arr);
    }
    return all_ok ? 0 : 2;
  }
  for (const auto& c : certs) {
    out << c.case_id << ": " << (c.verified ? "verified" : "FAILED") << "\n";
    print_steps(out, c.steps);
    out << "  final: " << c.final_equation.first.str() << " = "
        << c.final_equation.second.str() << "\n";
    for (const auto& [angle, p] : c.cofactors)
      out << "  cofactor of cos(" << angle << ")^2 + sin(" << angle << ")^2 - 1: "
          << p.str() << "\n";
    print_conditions(out, c.conditions, "  ");
    if (!c.verified) out << "  reason: " << c.failure << "\n";
  }
  return all_ok ? 0 : 2;
}

int emit_solution(const Solution& s, const Globals& g, const std::string& svg_path,
                  std::ostream& out) {
  if (!svg_path.empty()) {
    if (s.construction.points().empty())
      throw DomainError("this instance has no figure to render");
    write_file(svg_path, render_svg(s.construction, Assignment{}));
  }
  if (g.json) {
    out << dump(to_json(s));
    return 0;
  }
  out << s.str() << "\n";
  if (g.trace) print_steps(out, s.trace);
  return 0;
}

int cmd_eval(const std::string& expr_text, const std::vector<std::string>& at,
             const std::vector<std::string>& rad, const Globals& g, std::ostream& out) {
  const TrigRational e = parse(expr_text);
  const std::set<std::string> angles = e.angles();
  std::map<std::string, ExactReal> exact;
  Assignment numeric;
  bool all_exact = true;
  for (const auto& binding : at) {
    const auto [name, value] = split_binding(binding);
    if (angles.contains(name)) {
      const int d = parse_degrees(value);
      numeric.angles[name] = d * std::numbers::pi / 180.0;
      try {
        const SpecialRatios r = exact_ratios(d);
        exact["sin(" + name + ")"] = r.sin;
        exact["cos(" + name + ")"] = r.cos;
      } catch (const UnsupportedError&) {
        all_exact = false;
      }
    } else {
      const ExactReal v = parse_exact(value);
      exact[name] = v;
      numeric.lengths[name] = to_float(v);
    }
  }
  for (const auto& binding : rad) {
    const auto [name, value] = split_binding(binding);
    std::size_t used = 0;
    double r = 0.0;
    try {
      r = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size()) throw DomainError("bad radian value '" + value + "'");
    numeric.angles[name] = r;
    all_exact = false;
  }
  // Angles named in sin(30deg) style evaluate exactly without bindings.
  for (const auto& a : angles) {
    if (numeric.angles.contains(a)) continue;
    int d = 0;
    try {
      d = parse_degrees(a);
    } catch (const ParseError&) {
      continue;
    }
    numeric.angles[a] = d * std::numbers::pi / 180.0;
    try {
      const SpecialRatios r = exact_ratios(d);
      exact["sin(" + a + ")"] = r.sin;
      exact["cos(" + a + ")"] = r.cos;
    } catch (const UnsupportedError&) {
      all_exact = false;
    }
  }
  std::optional<ExactReal> value;
  if (all_exact) {
    try {
      value = eval_exact(e, exact);
    } catch (const ArithmeticError& ex) {
      throw EvaluationError(std::string("denominator vanishes: ") + ex.what());
    } catch (const DomainError&) {
      value.reset();
    }
  }
  const double approximation = value ? to_float(*value) : eval_numeric(e, numeric);
  if (g.json) {
    Json doc;
    doc["expression"] = e.str();
    if (value) doc["exact"] = value->str();
    doc["approximation"] = approx(approximation, "%.15g");
    out << dump(doc);
    return 0;
  }
  if (value) {
    out << value->str() << " ≈ " << approx(approximation) << "\n";
  } else {
    out << approx(approximation, "%.15g") << "\n";
  }
  return 0;
}

int cmd_render(const std::string& name, const std::vector<std::string>& at,
               const std::string& path, bool json, std::ostream& out) {
  const Figure f = make_figure(name);
  std::map<std::string, double> degrees;
  std::map<std::string, double> lengths;
  for (const auto& binding : at) {
    const auto [var, value] = split_binding(binding);
    if (f.default_lengths.contains(var)) {
      lengths[var] = to_float(parse_exact(value));
    } else {
      degrees[var] = parse_degrees(value);
    }
  }
  const auto document =
      construction_document(f.construction, figure_assignment(f, degrees, lengths));
  const std::string svg = json ? document.dump(2) + "\n" : render_svg(document);
  if (path.empty()) {
    out << svg;
  } else {
    write_file(path, svg);
    out << "wrote " << path << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact trigonometry by similar right triangles", "gasing"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--trace", g.trace, "Print derivation steps");

  std::string derive_name;
  auto* derive = app.add_subcommand("derive", "Run a formula derivation");
  derive->add_option("name", derive_name, "Derivation name")
      ->required()
      ->check(CLI::IsMember(derivation_names()));

  std::string prove_name;
  auto* prove = app.add_subcommand("prove", "Check proofs of cos^2 + sin^2 = 1");
  prove->add_option("name", prove_name, "main, alt, squares, case1..case8 or all")
      ->required();

  auto* solve = app.add_subcommand("solve", "Solve a worked problem exactly");
  solve->require_subcommand(1);
  std::string svg_path;
  solve->add_option("--svg", svg_path, "Write the construction as SVG");

  std::string given, want;
  auto* ratio = solve->add_subcommand("ratio", "Convert one trig ratio into another");
  ratio->add_option("--given", given, "fn=value, e.g. sin=1/2")->required();
  ratio->add_option("--want", want, "Wanted function")->required();

  std::string left, right, side;
  auto* asa = solve->add_subcommand("asa", "Two angles and a side sharing an altitude");
  asa->add_option("--left", left, "Angle opposite the unknown side")->required();
  asa->add_option("--right", right, "Angle opposite the given side")->required();
  asa->add_option("--side", side, "Given side")->required();

  std::string sb, sd, sangle;
  auto* sas = solve->add_subcommand("sas-obtuse", "Two sides around an obtuse angle");
  sas->add_option("--b", sb, "First side")->required();
  sas->add_option("--d", sd, "Second side")->required();
  sas->add_option("--angle", sangle, "Included obtuse angle")->required();

  std::string pole, upper, lower;
  auto* sight = solve->add_subcommand("sightlines", "Hill under a pole seen at two angles");
  sight->add_option("--pole", pole, "Pole height")->required();
  sight->add_option("--upper", upper, "Angle to the top of the pole")->required();
  sight->add_option("--lower", lower, "Angle to the foot of the pole")->required();

  std::string ralpha, rgamma, rc;
  auto* sine = solve->add_subcommand("sine-rule", "a = c sin(alpha)/sin(gamma)");
  sine->add_option("--alpha", ralpha, "Angle opposite a")->required();
  sine->add_option("--gamma", rgamma, "Angle opposite c")->required();
  sine->add_option("--c", rc, "Side c")->required();

  std::string cb, cc, calpha;
  auto* cosine = solve->add_subcommand("cosine-rule", "a^2 = b^2 + c^2 - 2bc cos(alpha)");
  cosine->add_option("--b", cb, "Side b")->required();
  cosine->add_option("--c", cc, "Side c")->required();
  cosine->add_option("--alpha", calpha, "Angle between b and c")->required();

  std::string expr;
  std::vector<std::string> eval_at, eval_rad;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr, "Expression")->required();
  eval->add_option("--at", eval_at, "name=30deg or length=value")->allow_extra_args(false);
  eval->add_option("--rad", eval_rad, "name=radians (numeric only)")
      ->allow_extra_args(false);

  std::string figure, render_out;
  std::vector<std::string> render_at;
  auto* render = app.add_subcommand("render", "Draw a figure as SVG");
  render->add_option("figure", figure, "Figure name")
      ->required()
      ->check(CLI::IsMember(figure_names()));
  render->add_option("--at", render_at, "name=30deg")->allow_extra_args(false);
  render->add_option("--out", render_out, "Output path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*derive) return cmd_derive(derive_name, g, out);
    if (*prove) return cmd_prove(prove_name, g, out);
    if (*eval) return cmd_eval(expr, eval_at, eval_rad, g, out);
    if (*render) return cmd_render(figure, render_at, render_out, g.json, out);
    if (*ratio) {
      const auto [fn, value] = split_binding(given);
      return emit_solution(solve_ratio(fn, parse_exact(value), want), g, svg_path, out);
    }
    if (*asa)
      return emit_solution(
          solve_asa_shared_altitude(angle_arg(left), angle_arg(right), parse_exact(side)),
          g, svg_path, out);
    if (*sas)
      return emit_solution(
          solve_sas_obtuse(parse_exact(sb), parse_exact(sd), angle_arg(sangle)), g,
          svg_path, out);
    if (*sight)
      return emit_solution(
          solve_two_sightlines(parse_exact(pole), angle_arg(upper), angle_arg(lower)), g,
          svg_path, out);
    if (*sine)
      return emit_solution(
          solve_sine_rule(angle_arg(ralpha), angle_arg(rgamma), parse_exact(rc)), g,
          svg_path, out);
    if (*cosine)
      return emit_solution(
          solve_cosine_rule(parse_exact(cb), parse_exact(cc), angle_arg(calpha)), g,
          svg_path, out);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace gasing
