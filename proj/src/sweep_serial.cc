#include <algorithm>
#include <cmath>
#include <random>

#include "gasing/errors.h"
#include "gasing/sweep.h"

namespace gasing {

CompiledExpr::CompiledExpr(const TrigRational& e) {
  num_ = compile(e.num());
  den_ = compile(e.den());
}

std::vector<CompiledExpr::Term> CompiledExpr::compile(const TrigPoly& p) {
  std::vector<Term> out;
  for (const auto& [m, coefficient] : p.terms()) {
    Term t{to_float(coefficient), {}};
    for (const auto& [v, exponent] : m.exponents()) {
      auto it = std::find(variables_.begin(), variables_.end(), v);
      std::size_t slot = static_cast<std::size_t>(it - variables_.begin());
      if (it == variables_.end()) variables_.push_back(v);
      t.powers.push_back({slot, exponent});
    }
    out.push_back(std::move(t));
  }
  return out;
}

double CompiledExpr::eval(const std::vector<Term>& terms, const double* slots) {
  double sum = 0.0;
  for (const auto& t : terms) {
    double v = t.coefficient;
    for (const auto& [slot, exponent] : t.powers) {
      for (unsigned k = 0; k < exponent; ++k) v *= slots[slot];
    }
    sum += v;
  }
  return sum;
}

double CompiledExpr::operator()(const double* slots) const {
  const double d = eval(den_, slots);
  if (std::abs(d) <= 1e-12) throw EvaluationError("denominator vanishes");
  return eval(num_, slots) / d;
}

std::vector<double> CompiledExpr::slots_for(const Assignment& at) const {
  std::vector<double> slots;
  slots.reserve(variables_.size());
  for (const auto& v : variables_) slots.push_back(at.value(v));
  return slots;
}

std::vector<Assignment> sample_points(const SampleSpace& space, std::size_t count,
                                      std::uint64_t seed) {
  constexpr double kDegree = 3.14159265358979323846 / 180.0;
  std::mt19937_64 rng(seed);
  std::vector<Assignment> out;
  out.reserve(count);
  const std::size_t budget = 1000 * count + 1000;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= budget)
      throw DomainError("side conditions reject almost every sample");
    Assignment at;
    for (const auto& [name, range] : space.degrees) {
      std::uniform_real_distribution<double> u(range.first, range.second);
      at.angles[name] = u(rng) * kDegree;
    }
    for (const auto& [name, range] : space.lengths) {
      std::uniform_real_distribution<double> u(range.first, range.second);
      at.lengths[name] = u(rng);
    }
    for (const auto& [name, angle] : space.dependent) {
      at.angles[name] = angle.radians(at.angles);
    }
    bool ok = true;
    for (const auto& c : space.avoid) {
      try {
        ok = holds(c, at, space.margin);
      } catch (const EvaluationError&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(at));
  }
  return out;
}

double point_error(double value, double expected, ErrorMeasure measure) {
  double err = std::abs(value - expected);
  if (measure == ErrorMeasure::Scaled) err /= std::max(1.0, std::abs(expected));
  return std::isnan(err) ? INFINITY : err;
}

SweepStats sweep_max_error_serial(const TrigRational& e, const Oracle& oracle,
                                  const std::vector<Assignment>& points,
                                  ErrorMeasure measure) {
  const CompiledExpr f(e);
  SweepStats stats;
  stats.points = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::vector<double> slots = f.slots_for(points[i]);
    const double err = point_error(f(slots.data()), oracle(points[i]), measure);
    if (err > stats.max_error) {
      stats.max_error = err;
      stats.worst = i;
    }
  }
  return stats;
}

std::vector<double> eval_batch_serial(const TrigRational& e,
                                      const std::vector<Assignment>& points) {
  const CompiledExpr f(e);
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::vector<double> slots = f.slots_for(points[i]);
    out[i] = f(slots.data());
  }
  return out;
}

}  // namespace gasing
