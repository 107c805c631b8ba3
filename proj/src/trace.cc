#include "gasing/trace.h"

namespace gasing {

std::size_t DerivationTrace::add(std::string description, std::string ref,
                                 TrigRational lhs, TrigRational rhs,
                                 bool identity_dependent) {
  steps.push_back({std::move(description), std::move(ref), std::move(lhs),
                   std::move(rhs), identity_dependent, {}, {}});
  return steps.size() - 1;
}

std::size_t DerivationTrace::derive(
    std::string description, std::string ref, TrigRational lhs,
    TrigRational rhs, std::vector<std::pair<std::size_t, TrigRational>> from) {
  steps.push_back({std::move(description), std::move(ref), std::move(lhs),
                   std::move(rhs), false, std::move(from), {}});
  return steps.size() - 1;
}

std::size_t DerivationTrace::define(std::string description, std::string ref,
                                    std::string label, TrigRational value) {
  steps.push_back({std::move(description), std::move(ref), value, value, false,
                   {}, std::move(label)});
  return steps.size() - 1;
}

void DerivationTrace::append(const DerivationTrace& other) {
  const std::size_t offset = steps.size();
  for (TraceStep step : other.steps) {
    for (auto& [index, k] : step.combination) index += offset;
    steps.push_back(std::move(step));
  }
}

bool DerivationTrace::any_identity_dependent() const {
  for (const auto& s : steps) {
    if (s.identity_dependent) return true;
  }
  return false;
}

std::size_t first_inconsistent_step(const DerivationTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    if (step.combination.empty()) continue;
    TrigRational sum;
    for (const auto& [j, k] : step.combination) {
      if (j >= i) return i;
      sum = sum + k * trace.steps[j].difference();
    }
    if (!expr_equals(step.difference(), sum)) return i;
  }
  return trace.steps.size();
}

}  // namespace gasing
