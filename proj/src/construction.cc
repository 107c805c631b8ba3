#include "gasing/construction.h"

#include <algorithm>

#include "gasing/errors.h"

namespace gasing {

namespace {

void require_distinct(const std::array<std::string, 3>& names) {
  if (names[0] == names[1] || names[1] == names[2] || names[0] == names[2])
    throw ConstructionError("triangle labels must be distinct");
}

}  // namespace

ScaleFactor ScaleFactor::of(const TrigRational& value) {
  if (value.is_zero()) throw ConstructionError("zero scale factor");
  ScaleFactor k{value.normalized(), {}};
  require_nonzero(value, k.conditions);
  return k;
}

GasingTriangle primary_triangle(const AngleSymbol& angle,
                                const std::array<std::string, 3>& names) {
  require_distinct(names);
  const TrigRational s = TrigPoly::sin(angle.name);
  const TrigRational c = TrigPoly::cos(angle.name);
  return {names, angle, TrigRational(1), s, c, s, c, {}};
}

SpecialRatios special_ratios(int degrees) {
  const Rational half(1, 2);
  switch (degrees) {
    case 0:
      return {ExactReal(0), ExactReal(1)};
    case 30:
      return {half, ExactReal::radical(half, 3)};
    case 45:
      return {ExactReal::radical(half, 2), ExactReal::radical(half, 2)};
    case 60:
      // The 30-degree triangle read from its other acute vertex.
      return {ExactReal::radical(half, 3), half};
    case 90:
      return {ExactReal(1), ExactReal(0)};
    default:
      throw UnsupportedError("no exact ratios for " + std::to_string(degrees) +
                             " degrees");
  }
}

GasingTriangle special_triangle(int degrees,
                                const std::array<std::string, 3>& names) {
  require_distinct(names);
  const SpecialRatios r = special_ratios(degrees);
  return {names, {std::to_string(degrees) + "deg"}, TrigRational(1),
          r.sin, r.cos, r.sin, r.cos, {}};
}

GasingTriangle triangle_from_sides(const AngleSymbol& angle,
                                   const std::array<std::string, 3>& names,
                                   const TrigRational& hyp,
                                   const TrigRational& opp,
                                   const TrigRational& adj) {
  require_distinct(names);
  if (hyp.is_zero()) throw ConstructionError("zero hypotenuse");
  GasingTriangle t{names, angle, hyp, opp, adj, {}, {}, {}};
  t.sin_value = poly_arith(opp, hyp, ArithOp::Div, &t.conditions);
  t.cos_value = poly_arith(adj, hyp, ArithOp::Div, &t.conditions);
  return t;
}

GasingTriangle scale_similar(const GasingTriangle& t, const ScaleFactor& k) {
  if (k.value.is_zero()) throw ConstructionError("zero scale factor");
  GasingTriangle out = t;
  out.hyp = t.hyp * k.value;
  out.opp = t.opp * k.value;
  out.adj = t.adj * k.value;
  out.conditions.merge(k.conditions);
  return out;
}

SegmentKey segment_key(const std::string& p, const std::string& q) {
  return p < q ? SegmentKey{p, q} : SegmentKey{q, p};
}

bool Construction::has_point(const std::string& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

void Construction::require_point(const std::string& p) const {
  if (!has_point(p)) throw ConstructionError("unknown point '" + p + "'");
}

void Construction::add_point(const std::string& p) {
  if (!has_point(p)) points_.push_back(p);
}

std::optional<TrigRational> Construction::segment(const std::string& p,
                                                  const std::string& q) const {
  auto it = segments_.find(segment_key(p, q));
  if (it == segments_.end()) return std::nullopt;
  return it->second;
}

TrigRational Construction::length(const std::string& p,
                                  const std::string& q) const {
  auto s = segment(p, q);
  if (!s) throw ConstructionError("segment " + p + q + " has no length");
  return *s;
}

void Construction::set_segment(const std::string& p, const std::string& q,
                               const TrigRational& length, bool equate,
                               const std::string& context) {
  const TrigRational value = length.normalized();
  auto [it, inserted] = segments_.try_emplace(segment_key(p, q), value);
  if (inserted || expr_equals(it->second, value)) return;
  if (!equate) {
    throw ConstructionError(context + ": edge " + p + q + " already has length " +
                            it->second.str() + ", cannot glue length " +
                            value.str());
  }
  equations_.push_back({value, it->second, p + q});
}

void Construction::attach(const GasingTriangle& t, const Gluing& gluing) {
  require_distinct(t.labels);
  int existing = 0;
  for (const auto& l : t.labels) existing += has_point(l) ? 1 : 0;
  const std::string context = "triangle " + t.labels[0] + t.labels[1] + t.labels[2];
  if (!points_.empty() && existing == 0)
    throw ConstructionError(context + " shares no point with the figure");
  if (existing == 1) {
    if (!gluing.ray)
      throw ConstructionError(context + " is glued at one point without a ray");
    const auto& r = *gluing.ray;
    if (has_point(r.vertex) ||
        std::find(t.labels.begin(), t.labels.end(), r.vertex) == t.labels.end())
      throw ConstructionError(context + ": ray vertex must be a new vertex");
    require_point(r.reference);
  }
  if (gluing.side.kind != SideHint::Kind::Default)
    require_point(gluing.side.reference);

  for (const auto& l : t.labels) add_point(l);
  set_segment(t.labels[0], t.labels[1], t.hyp, gluing.equate, context);
  set_segment(t.labels[1], t.labels[2], t.opp, gluing.equate, context);
  set_segment(t.labels[0], t.labels[2], t.adj, gluing.equate, context);
  right_angles_.push_back({t.labels[2], t.labels[0], t.labels[1]});
  angle_marks_.push_back({t.labels[0], t.labels[2], t.labels[1], t.angle.name});
  conditions_.merge(t.conditions);
  triangles_.push_back(t);
  Placement p{Placement::Kind::Triangle, triangles_.size() - 1, gluing, {}, false,
              std::nullopt};
  placements_.push_back(std::move(p));
}

void Construction::add_point_on_ray(const std::string& name,
                                    const std::string& origin,
                                    const std::string& reference, bool away,
                                    const TrigRational& distance) {
  if (has_point(name)) throw ConstructionError("point '" + name + "' exists");
  require_point(origin);
  require_point(reference);
  add_point(name);
  set_segment(origin, name, distance, false, "ray point " + name);
  placements_.push_back({Placement::Kind::RayPoint, 0, {}, {name, origin, reference},
                         away, std::nullopt});
}

void Construction::add_rectangle(const std::array<std::string, 4>& corners,
                                 const std::optional<TrigRational>& height,
                                 const SideHint& side) {
  require_point(corners[0]);
  require_point(corners[1]);
  if (has_point(corners[2]))
    throw ConstructionError("rectangle corner '" + corners[2] + "' exists");
  const std::string context = "rectangle " + corners[0] + corners[1] +
                              corners[2] + corners[3];
  const TrigRational base = length(corners[0], corners[1]);
  TrigRational h;
  if (has_point(corners[3])) {
    h = length(corners[0], corners[3]);
  } else {
    if (!height) throw ConstructionError(context + " needs a height");
    h = *height;
    if (side.kind != SideHint::Kind::Default) require_point(side.reference);
    add_point(corners[3]);
    set_segment(corners[0], corners[3], h, false, context);
  }
  add_point(corners[2]);
  set_segment(corners[1], corners[2], h, false, context);
  set_segment(corners[2], corners[3], base, false, context);
  for (int i = 0; i < 4; ++i) {
    right_angles_.push_back(
        {corners[i], corners[(i + 3) % 4], corners[(i + 1) % 4]});
  }
  Placement p{Placement::Kind::Rectangle, 0, {side, std::nullopt, false},
              {corners.begin(), corners.end()}, false, height};
  placements_.push_back(std::move(p));
}

std::vector<ImposedEquation> Construction::assert_rectangle(
    const std::array<std::string, 4>& corners) {
  for (const auto& p : corners) require_point(p);
  std::vector<ImposedEquation> out;
  for (int i = 0; i < 2; ++i) {
    const std::string &a = corners[i], &b = corners[i + 1];
    const std::string &c = corners[(i + 2) % 4], &d = corners[(i + 3) % 4];
    auto first = segment(a, b);
    auto second = segment(c, d);
    if (first && second) {
      if (!expr_equals(*first, *second)) {
        ImposedEquation e{*first, *second, a + b + " = " + c + d};
        equations_.push_back(e);
        out.push_back(e);
      }
    } else if (first) {
      set_segment(c, d, *first, false, "rectangle");
    } else if (second) {
      set_segment(a, b, *second, false, "rectangle");
    } else {
      throw ConstructionError("rectangle sides " + a + b + " and " + c + d +
                              " both lack lengths");
    }
  }
  for (int i = 0; i < 4; ++i) {
    right_angles_.push_back(
        {corners[i], corners[(i + 3) % 4], corners[(i + 1) % 4]});
  }
  return out;
}

void Construction::assert_segment(const std::string& p, const std::string& q,
                                  const TrigRational& length, bool equate) {
  require_point(p);
  require_point(q);
  set_segment(p, q, length, equate, "segment " + p + q);
}

void Construction::add_chain(const std::vector<std::string>& chain) {
  if (chain.size() < 2) throw ConstructionError("chain needs two points");
  for (const auto& p : chain) require_point(p);
  chains_.push_back(chain);
}

ChainEquation Construction::measure_chain(const std::vector<std::string>& chain) {
  if (std::find(chains_.begin(), chains_.end(), chain) == chains_.end())
    add_chain(chain);
  if (chain.size() == 2) return chain_equation(*this, chain);
  std::optional<std::size_t> missing;  // index into parts; parts.size() = whole
  const std::size_t n = chain.size() - 1;
  auto check = [&](std::size_t index, const std::string& p, const std::string& q) {
    if (segment(p, q)) return;
    if (missing)
      throw ConstructionError("chain segments " + p + q + " and others lack lengths");
    missing = index;
  };
  for (std::size_t i = 0; i < n; ++i) check(i, chain[i], chain[i + 1]);
  check(n, chain.front(), chain.back());
  if (missing) {
    if (*missing == n) {
      TrigRational sum;
      for (std::size_t i = 0; i < n; ++i) sum = sum + length(chain[i], chain[i + 1]);
      set_segment(chain.front(), chain.back(), sum, false, "chain");
    } else {
      TrigRational rest = length(chain.front(), chain.back());
      for (std::size_t i = 0; i < n; ++i) {
        if (i != *missing) rest = rest - length(chain[i], chain[i + 1]);
      }
      conditions_.add(SideCondition::positive(rest));
      set_segment(chain[*missing], chain[*missing + 1], rest, false, "chain");
    }
  }
  return chain_equation(*this, chain);
}

void Construction::add_right_angle(const std::string& vertex,
                                   const std::string& ray1,
                                   const std::string& ray2) {
  require_point(vertex);
  require_point(ray1);
  require_point(ray2);
  right_angles_.push_back({vertex, ray1, ray2});
}

Construction attach(Construction c, const GasingTriangle& t,
                    const Gluing& gluing) {
  c.attach(t, gluing);
  return c;
}

ChainEquation chain_equation(const Construction& c,
                             const std::vector<std::string>& chain) {
  if (chain.size() < 2) throw ConstructionError("chain needs two points");
  ChainEquation out;
  out.whole = c.length(chain.front(), chain.back());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    out.parts.push_back(c.length(chain[i], chain[i + 1]));
    out.sum = out.sum + out.parts.back();
  }
  return out;
}

}  // namespace gasing
