#include <cmath>
#include <exception>

#include "gasing/sweep.h"

namespace gasing {

SweepStats sweep_max_error(const TrigRational& e, const Oracle& oracle,
                           const std::vector<Assignment>& points,
                           ErrorMeasure measure) {
  const CompiledExpr f(e);
  const long n = static_cast<long>(points.size());
  std::vector<double> errors(points.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      const std::vector<double> slots = f.slots_for(points[i]);
      errors[i] = point_error(f(slots.data()), oracle(points[i]), measure);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  // Reduce in index order so ties pick the same point as the serial loop.
  SweepStats stats;
  stats.points = points.size();
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i] > stats.max_error) {
      stats.max_error = errors[i];
      stats.worst = i;
    }
  }
  return stats;
}

std::vector<double> eval_batch(const TrigRational& e,
                               const std::vector<Assignment>& points) {
  const CompiledExpr f(e);
  const long n = static_cast<long>(points.size());
  std::vector<double> out(points.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      const std::vector<double> slots = f.slots_for(points[i]);
      out[i] = f(slots.data());
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace gasing
