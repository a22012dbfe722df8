#include "mg/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace mg {

namespace {

constexpr std::array<const char*, 6> kPalette{"#4f81bd", "#f79646", "#9bbb59",
                                              "#8064a2", "#c0504d", "#4bacc6"};

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string xy(const Point& p) { return num(to_double(p.x)) + "," + num(to_double(-p.y)); }

std::string path_of(const std::vector<std::vector<Point>>& loops) {
  std::string d;
  for (const auto& loop : loops) {
    for (std::size_t i = 0; i < loop.size(); ++i) d += (i ? " L" : "M") + xy(loop[i]);
    d += " Z ";
  }
  if (!d.empty()) d.pop_back();
  return d;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  const Box box = bounding_box(scene.polygon.vertices());
  const double xmin = to_double(box.xmin), xmax = to_double(box.xmax);
  const double ymin = to_double(box.ymin), ymax = to_double(box.ymax);
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double pad = span * 0.05;
  const double marker = span * 0.01;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
    << "viewBox=\"" << num(xmin - pad) << ' ' << num(-ymax - pad) << ' '
    << num(xmax - xmin + 2 * pad) << ' ' << num(ymax - ymin + 2 * pad) << "\">\n";

  std::size_t color = 0;
  for (const auto& layer : scene.regions) {
    const std::string fill = layer.color.empty() ? kPalette[color++ % kPalette.size()] : layer.color;
    o << "<g id=\"" << escape(layer.name) << "\">\n";
    if (!layer.region.empty())
      o << "<path d=\"" << path_of(layer.region.outline()) << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.4\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
    o << "</g>\n";
  }

  o << "<path id=\"outline\" d=\"" << path_of({scene.polygon.vertices()})
    << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\" "
       "vector-effect=\"non-scaling-stroke\"/>\n";

  for (const auto& layer : scene.segments) {
    const std::string stroke = layer.color.empty() ? kPalette[color++ % kPalette.size()] : layer.color;
    o << "<g id=\"" << escape(layer.name) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"3\" vector-effect=\"non-scaling-stroke\">\n";
    for (const Segment& s : layer.segments)
      o << "<line x1=\"" << num(to_double(s.a.x)) << "\" y1=\"" << num(to_double(-s.a.y))
        << "\" x2=\"" << num(to_double(s.b.x)) << "\" y2=\"" << num(to_double(-s.b.y))
        << "\" vector-effect=\"non-scaling-stroke\"/>\n";
    o << "</g>\n";
  }

  for (const Point& m : scene.markers)
    o << "<circle cx=\"" << num(to_double(m.x)) << "\" cy=\"" << num(to_double(-m.y))
      << "\" r=\"" << num(marker * 0.6) << "\" fill=\"#555555\"/>\n";
  if (scene.query)
    o << "<circle id=\"query\" cx=\"" << num(to_double(scene.query->x)) << "\" cy=\""
      << num(to_double(-scene.query->y)) << "\" r=\"" << num(marker) << "\" fill=\"#d00000\"/>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace mg
