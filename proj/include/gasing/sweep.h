#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gasing/figures.h"
#include "gasing/trigexpr.h"

namespace gasing {

/// Double-precision copy of a quotient for repeated evaluation. Variables are
/// resolved once against a slot table.
class CompiledExpr {
 public:
  explicit CompiledExpr(const TrigRational& e);

  const std::vector<Variable>& variables() const { return variables_; }
  /// `slots` holds one value per entry of variables(). Throws EvaluationError
  /// when the denominator vanishes.
  double operator()(const double* slots) const;
  std::vector<double> slots_for(const Assignment& at) const;

 private:
  struct Term {
    double coefficient;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  static double eval(const std::vector<Term>& terms, const double* slots);
  std::vector<Term> compile(const TrigPoly& p);

  std::vector<Variable> variables_;
  std::vector<Term> num_;
  std::vector<Term> den_;
};

struct SampleSpace {
  std::map<std::string, std::pair<double, double>> degrees;  // free angles
  std::map<std::string, LinearAngle> dependent;
  std::map<std::string, std::pair<double, double>> lengths;
  ConditionSet avoid;     // samples must satisfy these with `margin`
  double margin = 1e-3;
};

/// Deterministic rejection sampling. Throws DomainError when the conditions
/// reject nearly every candidate.
std::vector<Assignment> sample_points(const SampleSpace& space, std::size_t count,
                                      std::uint64_t seed);

using Oracle = std::function<double(const Assignment&)>;

struct SweepStats {
  std::size_t points = 0;
  double max_error = 0.0;
  std::size_t worst = 0;  // index of the point with the largest error
};

// Scaled divides the difference by max(1, |oracle(p)|).
enum class ErrorMeasure { Absolute, Scaled };

/// max |e(p) - oracle(p)| over the points, OpenMP-parallel.
SweepStats sweep_max_error(const TrigRational& e, const Oracle& oracle,
                           const std::vector<Assignment>& points,
                           ErrorMeasure measure = ErrorMeasure::Absolute);
/// Same result computed in one thread, kept as the reference.
SweepStats sweep_max_error_serial(const TrigRational& e, const Oracle& oracle,
                                  const std::vector<Assignment>& points,
                                  ErrorMeasure measure = ErrorMeasure::Absolute);

/// Error of one value under the given measure; NaN maps to infinity.
double point_error(double value, double expected, ErrorMeasure measure);

std::vector<double> eval_batch(const TrigRational& e,
                               const std::vector<Assignment>& points);
std::vector<double> eval_batch_serial(const TrigRational& e,
                                      const std::vector<Assignment>& points);

}  // namespace gasing
