#pragma once

#include <vector>

#include "mg/geom.hpp"

namespace mg {

/// A closed planar point set stored as convex parts with pairwise disjoint
/// interiors. Zero-area parts are never stored.
class Region {
 public:
  Region() = default;
  /// Decomposes a simple polygon into convex parts.
  explicit Region(const SimplePolygon& polygon);
  /// Parts must be convex, CCW and interior-disjoint; zero-area parts are dropped.
  static Region from_convex_parts(std::vector<std::vector<Point>> parts);

  const std::vector<SimplePolygon>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  Rational area() const;
  /// Closed membership.
  bool contains(const Point& p) const;

  /// Boundary loops of the covered set: CCW outer loops, CW hole loops.
  std::vector<std::vector<Point>> outline() const;

  /// Re-merges fragmented parts into fewer convex pieces. Covered set and
  /// area are unchanged.
  Region compacted() const;

 private:
  std::vector<SimplePolygon> parts_;
};

Region region_union(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);
Region region_intersection(const Region& a, const Region& b);
/// Keeps the closed half-plane to the left of the directed line a -> b.
Region clip_half_plane(const Region& r, const Point& a, const Point& b);
/// Intersection of the closed segment s with r, as maximal subsegments.
std::vector<Segment> clip_segment(const Segment& s, const Region& r);

namespace convex {

using Ring = std::vector<Point>;

/// Keeps the closed left side of a -> b.
Ring clip(const Ring& poly, const Point& a, const Point& b);
Ring intersect(const Ring& a, const Ring& b);
/// Convex pieces covering closure(a \ b).
std::vector<Ring> subtract(const Ring& a, const Ring& b);
/// True when the interiors are certainly disjoint.
bool separated(const Ring& a, const Ring& b);
bool contains(const Ring& poly, const Point& p);

}  // namespace convex

}  // namespace mg
