#include "gasing/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace gasing {

namespace {

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string precise(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

using Json = nlohmann::ordered_json;

Json construction_document(const Construction& c, const Assignment& at) {
  const Layout pts = layout(c, at);
  Json doc;
  doc["points"] = Json::array();
  for (const auto& name : c.points()) {
    const Point2& p = pts.at(name);
    doc["points"].push_back({{"name", name}, {"x", p.x}, {"y", p.y}});
  }
  doc["segments"] = Json::array();
  for (const auto& [key, expr] : c.segments()) {
    doc["segments"].push_back({{"from", key.first},
                               {"to", key.second},
                               {"length_text", expr.str()},
                               {"length", distance(pts.at(key.first), pts.at(key.second))}});
  }
  doc["chains"] = Json::array();
  for (const auto& chain : c.chains()) doc["chains"].push_back(chain);
  doc["right_angles"] = Json::array();
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  auto add_mark = [&](const RightAngleMark& m) {
    if (!seen.insert({m.vertex, std::min(m.ray1, m.ray2), std::max(m.ray1, m.ray2)}).second)
      return;
    doc["right_angles"].push_back({{"vertex", m.vertex}, {"rays", {m.ray1, m.ray2}}});
  };
  for (const auto& t : c.triangles()) add_mark({t.right(), t.base(), t.far()});
  for (const auto& m : c.right_angles()) add_mark(m);
  return doc;
}

std::string render_svg(const Json& doc, const SvgOptions& options) {
  std::map<std::string, Point2> pts;
  for (const auto& p : doc.at("points"))
    pts[p.at("name").get<std::string>()] = {p.at("x").get<double>(), p.at("y").get<double>()};
  double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
  for (const auto& [name, p] : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  if (pts.empty()) min_x = min_y = max_x = max_y = 0.0;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = options.width / span;
  const double margin = 0.05 * options.width;
  const double w = (max_x - min_x) * scale + 2 * margin;
  const double h = (max_y - min_y) * scale + 2 * margin;
  // Figure y grows upward, SVG y downward.
  auto sx = [&](double x) { return (x - min_x) * scale + margin; };
  auto sy = [&](double y) { return (max_y - y) * scale + margin; };
  const double font = std::max(10.0, options.width / 40.0);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed4(w) << ' '
      << fixed4(h) << "\" width=\"" << fixed4(w) << "\" height=\"" << fixed4(h)
      << "\" font-family=\"sans-serif\" font-size=\"" << fixed4(font) << "\">\n";
  out << "<g class=\"segments\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& seg : doc.at("segments")) {
    const std::string from = seg.at("from"), to = seg.at("to");
    const Point2& p = pts.at(from);
    const Point2& q = pts.at(to);
    out << "<line class=\"segment\" data-from=\"" << from << "\" data-to=\"" << to
        << "\" data-expr=\"" << escape(seg.at("length_text").get<std::string>()) << "\" data-length=\""
        << precise(seg.at("length").get<double>()) << "\" x1=\"" << fixed4(sx(p.x))
        << "\" y1=\"" << fixed4(sy(p.y)) << "\" x2=\"" << fixed4(sx(q.x)) << "\" y2=\""
        << fixed4(sy(q.y)) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"right-angles\" fill=\"none\" stroke=\"gray\">\n";
  const double tick = 0.035 * options.width;
  for (const auto& m : doc.at("right_angles")) {
    const std::string vertex = m.at("vertex");
    const Point2& v = pts.at(vertex);
    const Point2& a = pts.at(m.at("rays").at(0).get<std::string>());
    const Point2& b = pts.at(m.at("rays").at(1).get<std::string>());
    auto unit = [&](const Point2& p) {
      const double d = std::max(distance(v, p), 1e-12);
      return Point2{(p.x - v.x) / d, (p.y - v.y) / d};
    };
    const double len = std::min({tick / scale, 0.3 * distance(v, a), 0.3 * distance(v, b)});
    const Point2 ua = unit(a), ub = unit(b);
    const Point2 p1{v.x + ua.x * len, v.y + ua.y * len};
    const Point2 p2{p1.x + ub.x * len, p1.y + ub.y * len};
    const Point2 p3{v.x + ub.x * len, v.y + ub.y * len};
    out << "<polyline class=\"right-angle\" data-vertex=\"" << vertex << "\" points=\""
        << fixed4(sx(p1.x)) << ',' << fixed4(sy(p1.y)) << ' ' << fixed4(sx(p2.x)) << ','
        << fixed4(sy(p2.y)) << ' ' << fixed4(sx(p3.x)) << ',' << fixed4(sy(p3.y))
        << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"segment-labels\" fill=\"navy\" text-anchor=\"middle\">\n";
  for (const auto& seg : doc.at("segments")) {
    const std::string from = seg.at("from"), to = seg.at("to");
    const Point2& p = pts.at(from);
    const Point2& q = pts.at(to);
    out << "<text class=\"segment-label\" data-segment=\"" << from << to << "\" x=\""
        << fixed4(sx((p.x + q.x) / 2)) << "\" y=\"" << fixed4(sy((p.y + q.y) / 2)) << "\">"
        << escape(seg.at("length_text").get<std::string>()) << "</text>\n";
  }
  out << "</g>\n";

  out << "<g class=\"points\">\n";
  for (const auto& point : doc.at("points")) {
    const std::string name = point.at("name");
    const Point2& p = pts.at(name);
    out << "<circle class=\"point\" data-name=\"" << name << "\" cx=\"" << fixed4(sx(p.x))
        << "\" cy=\"" << fixed4(sy(p.y)) << "\" r=\"2.5\"/>\n";
    out << "<text class=\"point-label\" x=\"" << fixed4(sx(p.x) + 4) << "\" y=\""
        << fixed4(sy(p.y) - 4) << "\">" << escape(name) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_svg(const Construction& c, const Assignment& at,
                       const SvgOptions& options) {
  return render_svg(construction_document(c, at), options);
}

}  // namespace gasing
