#pragma once

#include <map>
#include <string>
#include <utility>

#include "gasing/construction.h"
#include "gasing/exactnum.h"
#include "gasing/trace.h"

namespace gasing {

struct Solution {
  std::string problem;
  std::string quantity;  // e.g. "cos(a)", "a", "CD"
  // The answer, or its square when is_squared is set because the root would
  // need a nested radical.
  ExactReal value;
  bool is_squared = false;
  // Numeric value of the answer itself, bracketed by a rational enclosure.
  double approximation = 0.0;
  std::pair<double, double> enclosure{0.0, 0.0};
  DerivationTrace trace;
  Construction construction;

  /// "sqrt(3)/2 ≈ 0.866025", or for squared answers
  /// "a^2 = 25 + 12*sqrt(3), a ≈ 6.76643 (not a denested radical)".
  std::string str() const;
};

/// Degrees with exact trig values accepted by the solver.
bool is_solver_angle(int degrees);

/// fn is one of sin, cos, tan, sec, csc, cot; the angle is acute.
/// Throws DomainError for a value outside the function's acute range.
Solution solve_ratio(const std::string& given_fn, const ExactReal& given_value,
                     const std::string& want_fn);
Solution solve_asa_shared_altitude(int angle_left, int angle_right,
                                   const ExactReal& side_right);
Solution solve_sas_obtuse(const ExactReal& side_b, const ExactReal& side_d,
                          int obtuse_degrees);
/// Height CD of the hill under a pole of the given height seen at two angles.
Solution solve_two_sightlines(const ExactReal& pole_height, int upper_degrees,
                              int lower_degrees);
/// a = c sin(alpha)/sin(gamma).
Solution solve_sine_rule(int alpha, int gamma, const ExactReal& c);
/// a^2 = b^2 + c^2 - 2bc cos(alpha).
Solution solve_cosine_rule(const ExactReal& b, const ExactReal& c, int alpha);

enum class ProblemKind {
  RatioConversion,
  AsaSharedAltitude,
  SasObtuse,
  TwoSightlines,
  GenericSineRule,
  GenericCosineRule
};

struct ProblemInstance {
  ProblemKind kind;
  std::map<std::string, ExactReal> values;  // sides, heights, given ratio
  std::map<std::string, int> angles;         // degrees
  std::map<std::string, std::string> functions;  // "given", "want"
};

/// Dispatches on kind; throws DomainError naming a missing given.
Solution solve(const ProblemInstance& p);

}  // namespace gasing
