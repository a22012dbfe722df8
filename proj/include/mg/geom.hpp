// Exact rational geometry kernel. Every predicate and construction here is
// evaluated with GMP rationals; there is no floating-point path.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mg/error.hpp"

namespace mg {

// mpq_class keeps every result canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or an integer. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. den must be nonzero.
Rational ratio(long num, long den);

/// Canonical "p/q" wire form; integers are written with a "/1" denominator.
std::string to_wire(const Rational& r);

/// Bits needed for numerator plus denominator.
std::size_t bit_length(const Rational& r);

// Approximate value for display only.
double to_double(const Rational& r);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

Point make_point(long a, long b);
Point lerp(const Point& a, const Point& b, const Rational& t);
Point midpoint(const Point& a, const Point& b);

struct Segment {
  Point a;
  Point b;

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

// (q - p) x (r - p)
Rational cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);
int sign(const Rational& r);

/// True when p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

struct SegmentIntersection {
  enum class Kind { Empty, Point, Overlap };
  Kind kind = Kind::Empty;
  Point point;      // valid for Kind::Point
  Segment overlap;  // valid for Kind::Overlap, a < b lexicographically
};

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// Intersection of the supporting lines; nullopt-like flag when parallel.
bool line_intersection(const Point& a, const Point& b, const Point& c,
                       const Point& d, Point& out);

/// Parameter t with p = a + t(b - a), for p on the line through a, b.
Rational param_on_segment(const Point& a, const Point& b, const Point& p);

/// Mirror image of p across the line through a and b.
Point reflect_across_line(const Point& p, const Point& a, const Point& b);

Rational signed_area(std::span<const Point> ring);

/// Drops repeated and collinear vertices from a closed ring.
std::vector<Point> normalize_ring(std::vector<Point> ring);

bool ring_is_simple(std::span<const Point> ring);

bool ring_is_convex(std::span<const Point> ring);

class SimplePolygon {
 public:
  struct Unchecked {};

  SimplePolygon() = default;
  /// Normalizes the ring (duplicates, collinear vertices, CW -> CCW) and
  /// validates simplicity. Throws Error(NotSimple).
  explicit SimplePolygon(std::vector<Point> vertices);
  /// For rings already known to be normalized, simple and CCW.
  SimplePolygon(std::vector<Point> vertices, Unchecked) : v_(std::move(vertices)) {}

  const std::vector<Point>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Point& operator[](std::size_t i) const { return v_[i % v_.size()]; }
  const Point& vertex(std::size_t i) const { return v_[i % v_.size()]; }
  /// Edge i runs from vertex i to vertex i + 1.
  Segment edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }
  bool is_reflex(std::size_t i) const;
  bool is_convex() const { return ring_is_convex(v_); }

  friend bool operator==(const SimplePolygon& a, const SimplePolygon& b) {
    return a.v_ == b.v_;
  }

 private:
  std::vector<Point> v_;
};

Rational polygon_area(const SimplePolygon& p);

enum class Location { Interior, Boundary, Exterior };

Location point_in_polygon(const Point& q, const SimplePolygon& p);
Location point_in_ring(const Point& q, std::span<const Point> ring);

/// Closed segment ab lies inside the closed polygon: it may touch or run
/// along the boundary but never leaves it.
bool segment_in_closed_polygon(const SimplePolygon& p, const Point& a,
                               const Point& b);

/// Farthest point reached from `from` moving along the ray towards `through`
/// and beyond while staying in the closed polygon. `from` must lie in it.
Point ray_exit(const SimplePolygon& p, const Point& from, const Point& through);

/// Ear-clipping triangulation of a normalized CCW simple ring.
std::vector<std::array<std::size_t, 3>> triangulate(std::span<const Point> ring);

/// Vertex average; interior for convex rings.
Point vertex_centroid(std::span<const Point> ring);

struct Box {
  Rational xmin, ymin, xmax, ymax;
};

Box bounding_box(std::span<const Point> pts);

}  // namespace mg
