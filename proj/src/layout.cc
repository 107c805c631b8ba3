#include <cmath>
#include <numbers>

#include "gasing/construction.h"
#include "gasing/errors.h"

namespace gasing {

namespace {

constexpr double kTolerance = 1e-9;

Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(double k, Point2 a) { return {k * a.x, k * a.y}; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }

Point2 unit(Point2 a) {
  const double n = norm(a);
  if (n <= 1e-15) throw LayoutError("direction of zero length");
  return (1.0 / n) * a;
}

double tolerance_for(double scale) {
  return kTolerance * std::max(1.0, std::abs(scale));
}

class Placer {
 public:
  Placer(const Construction& c, const Assignment& at) : c_(c) {
    for (const auto& [key, expr] : c.segments()) {
      double value = 0.0;
      try {
        value = eval_numeric(expr, at);
      } catch (const EvaluationError& e) {
        throw LayoutError("segment " + key.first + key.second + ": " + e.what());
      }
      if (!(value > 1e-12)) {
        throw LayoutError("segment " + key.first + key.second +
                          " is degenerate (length " + std::to_string(value) + ")");
      }
      lengths_[key] = value;
    }
  }

  Layout run() {
    for (const Placement& p : c_.placements()) {
      switch (p.kind) {
        case Placement::Kind::Triangle:
          place_triangle(c_.triangles()[p.triangle], p.gluing);
          break;
        case Placement::Kind::RayPoint:
          place_ray_point(p);
          break;
        case Placement::Kind::Rectangle:
          place_rectangle(p);
          break;
      }
    }
    for (const auto& name : c_.points()) {
      if (!placed(name)) throw LayoutError("point " + name + " was never placed");
    }
    return where_;
  }

 private:
  bool placed(const std::string& p) const { return where_.count(p) > 0; }

  double len(const std::string& p, const std::string& q) const {
    auto it = lengths_.find(segment_key(p, q));
    if (it == lengths_.end())
      throw LayoutError("segment " + p + q + " has no length");
    return it->second;
  }

  // Third point at distance r1 from p and r2 from q.
  Point2 intersect(const std::string& p, double r1, const std::string& q,
                   double r2, const SideHint& hint) const {
    const Point2 P = where_.at(p), Q = where_.at(q);
    const Point2 pq = Q - P;
    const double d = norm(pq);
    if (d <= 1e-15) throw LayoutError("points " + p + " and " + q + " coincide");
    const double a = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
    double h2 = r1 * r1 - a * a;
    if (h2 < -tolerance_for(r1 * r1))
      throw LayoutError("no position at distances " + std::to_string(r1) + ", " +
                        std::to_string(r2) + " from " + p + ", " + q);
    const double h = std::sqrt(std::max(0.0, h2));
    const Point2 u = unit(pq);
    const Point2 base = P + a * u;
    const Point2 perp{-u.y, u.x};
    const Point2 first = base + h * perp;
    const Point2 second = base - h * perp;
    return choose(first, second, P, pq, hint);
  }

  Point2 choose(Point2 first, Point2 second, Point2 origin, Point2 direction,
                const SideHint& hint) const {
    if (hint.kind != SideHint::Kind::Default) {
      const double ref = cross(direction, where_.at(hint.reference) - origin);
      if (std::abs(ref) > 1e-12) {
        const bool first_same = cross(direction, first - origin) * ref > 0;
        const bool want_same = hint.kind == SideHint::Kind::Same;
        return first_same == want_same ? first : second;
      }
    }
    if (std::abs(first.y - second.y) > 1e-12) return first.y > second.y ? first : second;
    return first.x >= second.x ? first : second;
  }

  void place_triangle(const GasingTriangle& t, const Gluing& g) {
    const auto& L = t.labels;
    int count = 0;
    for (const auto& l : L) count += placed(l) ? 1 : 0;
    const double hyp = len(L[0], L[1]), opp = len(L[1], L[2]), adj = len(L[0], L[2]);
    if (count == 0) {
      where_[L[0]] = {0.0, 0.0};
      where_[L[2]] = {adj, 0.0};
      where_[L[1]] = {adj, opp};
      return;
    }
    if (count == 1) {
      const RayHint& r = *g.ray;
      std::string origin;
      for (const auto& l : L) {
        if (placed(l)) origin = l;
      }
      const Point2 O = where_.at(origin);
      Point2 dir = unit(where_.at(r.reference) - O);
      if (r.away) dir = -1.0 * dir;
      where_[r.vertex] = O + len(origin, r.vertex) * dir;
    }
    for (int i = 0; i < 3; ++i) {
      if (placed(L[i])) continue;
      const std::string& p = L[(i + 1) % 3];
      const std::string& q = L[(i + 2) % 3];
      where_[L[i]] = intersect(p, len(p, L[i]), q, len(q, L[i]), g.side);
    }
    (void)hyp;
  }

  void place_ray_point(const Placement& p) {
    const std::string& name = p.points[0];
    const Point2 O = where_.at(p.points[1]);
    Point2 dir = unit(where_.at(p.points[2]) - O);
    if (p.away) dir = -1.0 * dir;
    where_[name] = O + len(p.points[1], name) * dir;
  }

  void place_rectangle(const Placement& p) {
    const auto& k = p.points;
    const Point2 c0 = where_.at(k[0]), c1 = where_.at(k[1]);
    if (placed(k[3])) {
      where_[k[2]] = c1 + (where_.at(k[3]) - c0);
      return;
    }
    const double h = len(k[0], k[3]);
    const Point2 u = unit(c1 - c0);
    const Point2 n{-u.y, u.x};
    const Point2 chosen =
        choose(c0 + h * n, c0 - h * n, c0, c1 - c0, p.gluing.side);
    where_[k[3]] = chosen;
    where_[k[2]] = c1 + (chosen - c0);
  }

  const Construction& c_;
  std::map<SegmentKey, double> lengths_;
  Layout where_;
};

}  // namespace

double distance(const Point2& a, const Point2& b) { return norm(b - a); }

Layout layout(const Construction& c, const Assignment& at) {
  for (const auto& cond : c.conditions()) {
    if (!holds(cond, at, 1e-12))
      throw LayoutError("side condition " + cond.str() + " does not hold");
  }
  Placer placer(c, at);
  Layout where = placer.run();

  for (const auto& [key, expr] : c.segments()) {
    const double want = eval_numeric(expr, at);
    const double got = distance(where.at(key.first), where.at(key.second));
    if (std::abs(got - want) > tolerance_for(want)) {
      throw LayoutError("segment " + key.first + key.second + " has length " +
                        std::to_string(got) + ", expected " + std::to_string(want));
    }
  }
  for (const auto& m : c.right_angles()) {
    const Point2 v = where.at(m.vertex);
    const Point2 a = where.at(m.ray1) - v, b = where.at(m.ray2) - v;
    const double angle = std::atan2(std::abs(cross(a, b)), dot(a, b));
    if (std::abs(angle - std::numbers::pi / 2) > kTolerance) {
      throw LayoutError("angle at " + m.vertex + " between " + m.ray1 + " and " +
                        m.ray2 + " is not right");
    }
  }
  for (const auto& chain : c.chains()) {
    const Point2 start = where.at(chain.front());
    const Point2 span = where.at(chain.back()) - start;
    const double total = norm(span);
    const Point2 u = unit(span);
    double previous = -tolerance_for(total);
    for (const auto& name : chain) {
      const Point2 r = where.at(name) - start;
      const double along = dot(r, u);
      if (std::abs(cross(u, r)) > tolerance_for(total) ||
          along < previous - tolerance_for(total)) {
        throw LayoutError("point " + name + " breaks chain collinearity");
      }
      previous = along;
    }
  }
  for (const auto& e : c.equations()) {
    const double l = eval_numeric(e.lhs, at), r = eval_numeric(e.rhs, at);
    if (std::abs(l - r) > tolerance_for(r))
      throw LayoutError("measurements of " + e.description + " disagree");
  }
  return where;
}

}  // namespace gasing
