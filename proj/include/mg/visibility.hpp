#pragma once

#include <utility>
#include <vector>

#include "mg/geom.hpp"
#include "mg/region.hpp"

namespace mg {

struct VisibilityPolygon {
  SimplePolygon polygon;
  std::vector<Segment> windows;
  Point source;
  Region region;  // same point set as `polygon`, as convex parts
};

/// Convex quadrilateral covering every point of p behind segment ab as seen
/// from q. q must not be collinear with ab.
std::vector<Point> shadow_cone(const SimplePolygon& p, const Point& q, const Point& a,
                               const Point& b);

/// Closed visibility region of q. Throws Error(QueryOutsidePolygon).
Region visibility_region(const SimplePolygon& p, const Point& q);

VisibilityPolygon visibility_polygon(const SimplePolygon& p, const Point& q);

/// Maximal pieces of the boundary of vp.polygon that do not run along the
/// boundary of p.
std::vector<Segment> windows_of(const VisibilityPolygon& vp, const SimplePolygon& p);

/// Points of p visible from at least one relative-interior point of s.
/// Throws Error(SegmentOutsidePolygon).
Region weak_visibility_polygon(const SimplePolygon& p, const Segment& s);

using Interval = std::pair<Rational, Rational>;

/// Parameter intervals (t in [0, 1] along s) of points of s seen from x.
/// Only positive-length intervals are returned.
std::vector<Interval> visible_intervals(const SimplePolygon& p, const Point& x,
                                        const Segment& s);

/// True when x sees a positive-length part of s.
bool sees_segment(const SimplePolygon& p, const Point& x, const Segment& s);

/// Mutual visibility of two points of the closed polygon (grazing allowed).
bool points_visible(const SimplePolygon& p, const Point& a, const Point& b);

/// Sorted, merged union of intervals; zero-length pieces dropped.
std::vector<Interval> merge_intervals(std::vector<Interval> spans);
/// [0, 1] minus the union of `spans`.
std::vector<Interval> complement_intervals(const std::vector<Interval>& spans);

}  // namespace mg
