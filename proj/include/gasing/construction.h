#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasing/trigexpr.h"

namespace gasing {

/// Labeled right triangle. labels = {base vertex carrying `angle`, far end of
/// the hypotenuse, right-angle vertex}; hyp joins labels 0-1, opp joins 1-2
/// and adj joins 0-2.
struct GasingTriangle {
  std::array<std::string, 3> labels;
  AngleSymbol angle;
  TrigRational hyp;
  TrigRational opp;
  TrigRational adj;
  TrigRational sin_value;
  TrigRational cos_value;
  ConditionSet conditions;

  const std::string& base() const { return labels[0]; }
  const std::string& far() const { return labels[1]; }
  const std::string& right() const { return labels[2]; }
};

struct ScaleFactor {
  TrigRational value;
  ConditionSet conditions;

  /// Throws ConstructionError for a structurally zero factor.
  static ScaleFactor of(const TrigRational& value);
};

/// Unit hypotenuse, opp = sin(angle), adj = cos(angle).
GasingTriangle primary_triangle(const AngleSymbol& angle,
                                const std::array<std::string, 3>& names);

struct SpecialRatios {
  ExactReal sin;
  ExactReal cos;
};
/// Side ratios of the unit-hypotenuse triangle at 0, 30, 45, 60 or 90 degrees.
/// Throws UnsupportedError for any other angle.
SpecialRatios special_ratios(int degrees);

/// Primary triangle whose angle is a special degree value; sides are exact.
GasingTriangle special_triangle(int degrees,
                                const std::array<std::string, 3>& names);

/// Right triangle with given exact sides; sin/cos are read off as ratios.
GasingTriangle triangle_from_sides(const AngleSymbol& angle,
                                   const std::array<std::string, 3>& names,
                                   const TrigRational& hyp,
                                   const TrigRational& opp,
                                   const TrigRational& adj);

GasingTriangle scale_similar(const GasingTriangle& t, const ScaleFactor& k);

// Which of the two mirror-image positions a new point takes, relative to the
// line through the two points it is constructed from.
struct SideHint {
  enum class Kind { Default, Same, Opposite };
  Kind kind = Kind::Default;
  std::string reference;

  static SideHint same_as(std::string p) { return {Kind::Same, std::move(p)}; }
  static SideHint opposite(std::string p) {
    return {Kind::Opposite, std::move(p)};
  }
};

// For a triangle sharing a single point with the figure: the triangle vertex
// `vertex` lies on the ray from the shared point toward (or away from)
// `reference`.
struct RayHint {
  std::string vertex;
  std::string reference;
  bool away = false;
};

struct Gluing {
  SideHint side;
  std::optional<RayHint> ray;
  // Accept a symbolically different length on an existing edge and record
  // the two measurements as an equation instead of failing.
  bool equate = false;
};

struct RightAngleMark {
  std::string vertex;
  std::string ray1;
  std::string ray2;
};

struct AngleMark {
  std::string vertex;
  std::string ray1;
  std::string ray2;
  std::string label;
};

/// Two measurements of one quantity: lhs is the new reading, rhs the one
/// already in the figure.
struct ImposedEquation {
  TrigRational lhs;
  TrigRational rhs;
  std::string description;
};

struct ChainEquation {
  TrigRational whole;
  std::vector<TrigRational> parts;
  TrigRational sum;
};

using SegmentKey = std::pair<std::string, std::string>;
SegmentKey segment_key(const std::string& p, const std::string& q);

struct Placement {
  enum class Kind { Triangle, RayPoint, Rectangle };
  Kind kind;
  std::size_t triangle = 0;
  Gluing gluing;
  // RayPoint: points = {new point, origin, reference}; Rectangle: corners.
  std::vector<std::string> points;
  bool away = false;
  std::optional<TrigRational> height;
};

class Construction {
 public:
  const std::vector<std::string>& points() const { return points_; }
  bool has_point(const std::string& p) const;
  const std::map<SegmentKey, TrigRational>& segments() const {
    return segments_;
  }
  std::optional<TrigRational> segment(const std::string& p,
                                      const std::string& q) const;
  /// Throws ConstructionError when the segment has no length.
  TrigRational length(const std::string& p, const std::string& q) const;

  const std::vector<std::vector<std::string>>& chains() const {
    return chains_;
  }
  const std::vector<RightAngleMark>& right_angles() const {
    return right_angles_;
  }
  const std::vector<AngleMark>& angle_marks() const { return angle_marks_; }
  const std::vector<ImposedEquation>& equations() const { return equations_; }
  const std::vector<GasingTriangle>& triangles() const { return triangles_; }
  const std::vector<Placement>& placements() const { return placements_; }
  const ConditionSet& conditions() const { return conditions_; }

  void attach(const GasingTriangle& t, const Gluing& gluing = {});
  /// New point at the given distance from origin along the ray toward (or
  /// away from) reference.
  void add_point_on_ray(const std::string& name, const std::string& origin,
                        const std::string& reference, bool away,
                        const TrigRational& distance);
  /// Rectangle c0-c1-c2-c3 built on existing c0, c1. Either c2 and c3 are new
  /// and stand `height` away on the hinted side, or c3 exists and c2 is new.
  void add_rectangle(const std::array<std::string, 4>& corners,
                     const std::optional<TrigRational>& height,
                     const SideHint& side = {});
  /// Declares an existing quadrilateral a rectangle: a missing side takes the
  /// length of its opposite side; two known opposite sides that differ
  /// symbolically are returned (and recorded) as equations.
  std::vector<ImposedEquation> assert_rectangle(
      const std::array<std::string, 4>& corners);
  void assert_segment(const std::string& p, const std::string& q,
                      const TrigRational& length, bool equate = false);
  void add_chain(const std::vector<std::string>& chain);
  /// Reads the chain as whole = sum of parts, first defining the one segment
  /// among them that still lacks a length (by sum or by difference).
  ChainEquation measure_chain(const std::vector<std::string>& chain);
  void add_right_angle(const std::string& vertex, const std::string& ray1,
                       const std::string& ray2);
  void add_condition(const SideCondition& c) { conditions_.add(c); }
  void add_conditions(const ConditionSet& c) { conditions_.merge(c); }

 private:
  void require_point(const std::string& p) const;
  void add_point(const std::string& p);
  void set_segment(const std::string& p, const std::string& q,
                   const TrigRational& length, bool equate,
                   const std::string& context);

  std::vector<std::string> points_;
  std::map<SegmentKey, TrigRational> segments_;
  std::vector<std::vector<std::string>> chains_;
  std::vector<RightAngleMark> right_angles_;
  std::vector<AngleMark> angle_marks_;
  std::vector<ImposedEquation> equations_;
  std::vector<GasingTriangle> triangles_;
  std::vector<Placement> placements_;
  ConditionSet conditions_;
};

/// Copying form of Construction::attach.
Construction attach(Construction c, const GasingTriangle& t,
                    const Gluing& gluing = {});

/// whole = sum of parts for a chain whose segments all have lengths.
ChainEquation chain_equation(const Construction& c,
                             const std::vector<std::string>& chain);

// --- Numeric layout --------------------------------------------------------

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

using Layout = std::map<std::string, Point2>;

/// Places every point by replaying the construction steps at the given
/// variable values, then checks segment lengths and right angles (1e-9),
/// chain collinearity, imposed equations and side conditions.
/// Throws LayoutError when any check fails.
Layout layout(const Construction& c, const Assignment& at);

double distance(const Point2& a, const Point2& b);

}  // namespace gasing
