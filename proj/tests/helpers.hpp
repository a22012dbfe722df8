#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "mg/error.hpp"
#include "mg/geom.hpp"
#include "mg/region.hpp"

namespace th {

using mg::Point;
using mg::Rational;

inline Point P(long x, long y) { return mg::make_point(x, y); }
inline Point Q(long xn, long xd, long yn, long yd) { return {mg::ratio(xn, xd), mg::ratio(yn, yd)}; }

inline mg::SimplePolygon poly(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Point> ring;
  for (auto [x, y] : v) ring.push_back(P(x, y));
  return mg::SimplePolygon(std::move(ring));
}

inline mg::SimplePolygon unit_square() { return poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline mg::SimplePolygon l_shape() { return poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }
inline mg::SimplePolygon pentagon_funnel() { return poly({{0, 0}, {6, 0}, {4, 2}, {3, 5}, {2, 2}}); }

inline mg::Region rect(const Rational& x0, const Rational& y0, const Rational& x1,
                       const Rational& y1) {
  return mg::Region::from_convex_parts({{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}});
}

// Fraction of a fine grid inside a region, scaled to the bounding box area.
inline Rational grid_area(const mg::Region& r, const Rational& x0, const Rational& y0,
                          const Rational& x1, const Rational& y1, long res) {
  long hits = 0;
  for (long i = 0; i < res; ++i)
    for (long j = 0; j < res; ++j) {
      const Point x{x0 + (x1 - x0) * mg::ratio(2 * i + 1, 2 * res),
                    y0 + (y1 - y0) * mg::ratio(2 * j + 1, 2 * res)};
      if (r.contains(x)) ++hits;
    }
  return (x1 - x0) * (y1 - y0) * mg::ratio(hits, res * res);
}

// Midpoint of the kernel's contact with the given edge.
inline Point kernel_point_on_chord(const mg::SimplePolygon& p, std::size_t chord) {
  mg::Region k(p);
  for (std::size_t i = 0; i < p.size(); ++i) k = mg::clip_half_plane(k, p.edge(i).a, p.edge(i).b);
  const auto pieces = mg::clip_segment(p.edge(chord), k);
  if (pieces.empty()) throw mg::Error(mg::ErrorCode::Internal, "no kernel point on the chord");
  return mg::lerp(pieces.front().a, pieces.front().b, mg::ratio(1, 2));
}

}  // namespace th
