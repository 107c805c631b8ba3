#include "gasing/trace_json.h"

#include <cstdio>

namespace gasing {

namespace {

std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Json steps_json(const DerivationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["description"] = s.description;
    step["ref"] = s.ref;
    step["lhs"] = s.lhs_text();
    step["rhs"] = s.rhs.str();
    if (!s.combination.empty()) {
      Json from = Json::array();
      for (const auto& [j, k] : s.combination) {
        from.push_back(Json{{"step", j + 1}, {"multiplier", k.str()}});
      }
      step["follows_from"] = std::move(from);
    }
    if (s.identity_dependent) step["uses_identity"] = true;
    steps.push_back(std::move(step));
  }
  return steps;
}

Json conditions_json(const ConditionSet& conditions) {
  Json out = Json::array();
  for (const auto& c : conditions) out.push_back(c.str());
  return out;
}

Json trace_document(const std::string& operation, const DerivationTrace& trace,
                    const std::string& result, const ConditionSet& conditions,
                    const std::optional<std::string>& verdict) {
  Json doc;
  doc["operation"] = operation;
  doc["steps"] = steps_json(trace);
  doc["result"] = result;
  doc["side_conditions"] = conditions_json(conditions);
  if (verdict) doc["verdict"] = *verdict;
  return doc;
}

Json to_json(const Derivation& d) {
  ConditionSet all;
  std::string result;
  Json formulas = Json::array();
  for (const auto& f : d.formulas) {
    all.merge(f.conditions);
    if (!result.empty()) result += "; ";
    result += f.str();
    formulas.push_back(Json{{"tag", f.tag},
                            {"lhs", f.name},
                            {"rhs", f.rhs.str()},
                            {"side_conditions", conditions_json(f.conditions)}});
  }
  Json doc = trace_document("derive " + d.operation, d.trace, result, all);
  doc["formulas"] = std::move(formulas);
  return doc;
}

Json to_json(const ProofCertificate& cert) {
  const std::string result =
      cert.final_equation.first.str() + " = " + cert.final_equation.second.str();
  Json doc = trace_document("prove " + cert.case_id, cert.steps, result, cert.conditions,
                            cert.verified ? "verified" : "failed");
  Json cofactors = Json::object();
  for (const auto& [angle, p] : cert.cofactors) cofactors[angle] = p.str();
  doc["cofactors"] = std::move(cofactors);
  if (!cert.cleared_denominator.is_constant())
    doc["cleared_denominator"] = cert.cleared_denominator.str();
  if (!cert.quantities.empty()) {
    Json q = Json::object();
    for (const auto& [name, value] : cert.quantities) q[name] = value.str();
    doc["quantities"] = std::move(q);
  }
  if (!cert.verified) doc["failure"] = cert.failure;
  return doc;
}

Json to_json(const Solution& s) {
  Json doc = trace_document("solve " + s.problem, s.trace, s.str(), {});
  doc["quantity"] = s.quantity;
  doc["exact"] = s.value.str();
  doc["squared"] = s.is_squared;
  doc["approximation"] = decimal(s.approximation);
  doc["enclosure"] = Json::array({decimal(s.enclosure.first), decimal(s.enclosure.second)});
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gasing
