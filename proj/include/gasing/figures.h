#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasing/construction.h"

namespace gasing {

/// degrees + sum coefficient_i * angle_i, used for angles such as a+b or
/// 90deg - a that a figure introduces as their own symbols.
struct LinearAngle {
  std::map<std::string, Rational> coefficients;
  Rational degrees;

  double radians(const std::map<std::string, double>& angle_radians) const;
  // Exact degree value when every referenced angle has one.
  std::optional<Rational> exact_degrees(
      const std::map<std::string, int>& angle_degrees) const;
};

struct Figure {
  std::string name;
  Construction construction;
  std::vector<std::string> free_angles;
  std::map<std::string, double> default_degrees;
  // Sampling bounds for property checks, in degrees; every point of the box
  // satisfies the side conditions.
  std::map<std::string, std::pair<double, double>> degree_ranges;
  std::map<std::string, LinearAngle> dependent_angles;
  std::map<std::string, double> default_lengths;
  std::map<std::string, TrigRational> dependent_lengths;
};

std::vector<std::string> figure_names();

/// Throws DomainError for an unknown name.
Figure make_figure(const std::string& name);

/// Angle values in degrees (overriding defaults) resolved to a full numeric
/// assignment including dependent angles and lengths.
Assignment figure_assignment(const Figure& f,
                             const std::map<std::string, double>& degrees = {},
                             const std::map<std::string, double>& lengths = {});

/// Exact values of every sine, cosine and length in the figure when each
/// angle lands on 0, 30, 45, 60 or 90 degrees; nullopt otherwise.
std::optional<std::map<std::string, ExactReal>> figure_exact_values(
    const Figure& f, const std::map<std::string, int>& degrees,
    const std::map<std::string, Rational>& lengths = {});

// Individual builders, shared with the derivation and proof code.
Construction build_figure2();
Construction build_figure7();
Construction build_figure8d();
Construction build_figure8e();
Construction build_figure9c();
Construction build_figure10();
Construction build_case(int n);

}  // namespace gasing
