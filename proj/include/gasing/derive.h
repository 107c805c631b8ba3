#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gasing/construction.h"
#include "gasing/trace.h"

namespace gasing {

struct Formula {
  std::string tag;   // stable identifier, e.g. "sin-sum"
  std::string name;  // left-hand side as text, e.g. "sin(a+b)"
  std::optional<TrigRational> lhs;
  TrigRational rhs;
  ConditionSet conditions;

  std::string str() const;
};

struct Derivation {
  std::string operation;
  std::vector<Formula> formulas;
  DerivationTrace trace;
  Construction construction;

  /// Throws DomainError when no formula carries the tag.
  const Formula& formula(const std::string& tag) const;
};

/// tan, sec, cot, csc from the triangles scaled by 1/cos(a) and 1/sin(a).
Derivation derived_functions();
/// sin(a+b) and cos(a+b) read off the sum figure.
Derivation sum_formulas();
/// sin(a-b) and cos(a-b) from the difference figure, cross-checked against
/// the sum formulas under b -> -b. Throws VerificationError on disagreement.
Derivation difference_formulas();
/// sin(2a) and the three forms of cos(2a); the last two use the identity.
Derivation double_angle();
/// a/sin(alpha) = c/sin(gamma) from the shared altitude.
Derivation sine_rule();
/// a^2 = b^2 + c^2 - 2bc cos(alpha); the final step uses the identity.
Derivation cosine_rule();
/// The six cofunction identities with g = 90deg - a.
Derivation cofunction();
/// Signed cos/sin in each quadrant for a symbolic reference angle.
Derivation quadrant_table();

/// Names accepted by derive_by_name.
std::vector<std::string> derivation_names();
Derivation derive_by_name(const std::string& name);

// --- Quadrants -------------------------------------------------------------

/// theta given by an acute reference (symbolic or special degrees) and the
/// quadrant of the unit vector: theta = ref, 180-ref, 180+ref, 360-ref.
struct Angle {
  std::variant<AngleSymbol, int> reference;
  int quadrant = 1;

  static Angle symbolic(const std::string& name, int quadrant = 1) {
    return {AngleSymbol{name}, quadrant};
  }
  static Angle special(int degrees, int quadrant = 1) {
    return {degrees, quadrant};
  }
  std::string str() const;
};

struct SignedPair {
  TrigRational cos;
  TrigRational sin;
  DerivationTrace trace;
};

/// Throws DomainError for a quadrant outside 1..4 or a reference outside
/// [0, 90] degrees.
SignedPair quadrant_signed(const Angle& angle);

/// Quadrant and reference angle (degrees) of an integer degree value.
struct DegreeDecomposition {
  int quadrant;
  int reference;
};
DegreeDecomposition decompose_degrees(int degrees);

/// Exact value of sin, cos, tan, sec, csc or cot at 0, 30, 45, 60 or 90
/// degrees. Throws DomainError where the function is undefined and
/// UnsupportedError for other angles.
ExactReal special_value(const std::string& fn, int degrees);

/// Exact sine and cosine of any integer degree value whose reference angle
/// is special, via quadrant reduction.
SpecialRatios exact_ratios(int degrees);

// --- Helpers shared with proofs and the solver ------------------------------

/// Solves lhs = rhs for a variable that occurs to the first power.
/// Throws DomainError when the variable is absent or nonlinear.
TrigRational solve_linear(const Variable& v, const TrigRational& lhs,
                          const TrigRational& rhs);

}  // namespace gasing
