#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gasing/trigexpr.h"

namespace gasing {

/// One recorded equation lhs = rhs. `ref` names the figure relation the step
/// reads from. When `combination` is non-empty the step claims
///   (rhs - lhs) == sum_j k_j * (rhs_j - lhs_j)
/// over earlier steps j, which proof verification checks exactly.
struct TraceStep {
  std::string description;
  std::string ref;
  TrigRational lhs;
  TrigRational rhs;
  bool identity_dependent = false;
  std::vector<std::pair<std::size_t, TrigRational>> combination;
  // Name shown in place of lhs, for steps that define a named quantity.
  std::string label;

  TrigRational difference() const { return rhs - lhs; }
  std::string lhs_text() const { return label.empty() ? lhs.str() : label; }
};

struct DerivationTrace {
  std::vector<TraceStep> steps;

  std::size_t add(std::string description, std::string ref, TrigRational lhs,
                  TrigRational rhs, bool identity_dependent = false);
  // Adds a step derived from earlier ones; see TraceStep::combination.
  std::size_t derive(std::string description, std::string ref,
                     TrigRational lhs, TrigRational rhs,
                     std::vector<std::pair<std::size_t, TrigRational>> from);
  // Records `label = value`.
  std::size_t define(std::string description, std::string ref, std::string label,
                     TrigRational value);
  void append(const DerivationTrace& other);
  bool any_identity_dependent() const;
  std::size_t size() const { return steps.size(); }
  const TraceStep& back() const { return steps.back(); }
};

/// Returns the index of the first step whose recorded combination does not
/// hold, or steps.size() when every combination checks out.
std::size_t first_inconsistent_step(const DerivationTrace& trace);

}  // namespace gasing
