#include "mg/visibility.hpp"

#include <algorithm>
#include <set>

namespace mg {

std::vector<Interval> merge_intervals(std::vector<Interval> spans) {
  std::sort(spans.begin(), spans.end());
  std::vector<Interval> out;
  for (auto& s : spans) {
    if (s.first >= s.second) continue;
    if (!out.empty() && s.first <= out.back().second) {
      if (s.second > out.back().second) out.back().second = s.second;
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Interval> complement_intervals(const std::vector<Interval>& spans) {
  std::vector<Interval> out;
  Rational cur = 0;
  for (const auto& s : merge_intervals(spans)) {
    if (s.first > cur) out.emplace_back(cur, s.first);
    if (s.second > cur) cur = s.second;
  }
  if (cur < 1) out.emplace_back(cur, Rational(1));
  return out;
}

namespace {

// Shrinks [lo, hi] to the t with f0 + t (f1 - f0) >= 0.
bool clip_linear(const Rational& f0, const Rational& f1, Rational& lo, Rational& hi) {
  const Rational df = f1 - f0;
  if (sgn(df) == 0) return sgn(f0) >= 0;
  const Rational t = -f0 / df;
  if (sgn(df) > 0) {
    if (t > lo) lo = t;
  } else if (t < hi) {
    hi = t;
  }
  return lo < hi;
}

}  // namespace

std::vector<Point> shadow_cone(const SimplePolygon& p, const Point& q, const Point& a,
                               const Point& b) {
  const Rational c0 = cross(a, b, q);
  Rational extreme = 0;
  for (const Point& v : p.vertices()) {
    const Rational c = cross(a, b, v) / c0;  // negative beyond the edge
    if (c < extreme) extreme = c;
  }
  const Rational k = -extreme + 1;
  const Point a2{a.x + k * (a.x - q.x), a.y + k * (a.y - q.y)};
  const Point b2{b.x + k * (b.x - q.x), b.y + k * (b.y - q.y)};
  std::vector<Point> quad{a, b, b2, a2};
  if (signed_area(quad) < 0) std::reverse(quad.begin(), quad.end());
  return quad;
}

Region visibility_region(const SimplePolygon& p, const Point& q) {
  const Location loc = point_in_polygon(q, p);
  if (loc == Location::Exterior)
    throw Error(ErrorCode::QueryOutsidePolygon, "query point lies outside the polygon");
  Region vis(p);
  const bool interior = loc == Location::Interior;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Segment e = p.edge(i);
    const int side = sgn(cross(e.a, e.b, q));
    if (side == 0) continue;
    // From an interior point the first boundary crossing is always through
    // an edge facing q, so back faces can be skipped.
    if (interior && side < 0) continue;
    vis = region_difference(vis, Region::from_convex_parts({shadow_cone(p, q, e.a, e.b)}));
  }
  return vis.compacted();
}

std::vector<Segment> windows_of(const VisibilityPolygon& vp, const SimplePolygon& p) {
  std::vector<Segment> out;
  const auto& ring = vp.polygon.vertices();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Segment e{ring[i], ring[(i + 1) % ring.size()]};
    std::vector<Interval> covered;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const auto x = segment_intersection(e, p.edge(j));
      if (x.kind != SegmentIntersection::Kind::Overlap) continue;
      Rational t0 = param_on_segment(e.a, e.b, x.overlap.a);
      Rational t1 = param_on_segment(e.a, e.b, x.overlap.b);
      if (t0 > t1) std::swap(t0, t1);
      covered.emplace_back(t0, t1);
    }
    for (const auto& [lo, hi] : complement_intervals(covered))
      out.push_back({lerp(e.a, e.b, lo), lerp(e.a, e.b, hi)});
  }
  return out;
}

VisibilityPolygon visibility_polygon(const SimplePolygon& p, const Point& q) {
  VisibilityPolygon vp;
  vp.source = q;
  vp.region = visibility_region(p, q);
  auto loops = vp.region.outline();
  if (loops.empty()) throw Error(ErrorCode::Internal, "empty visibility region");
  std::size_t best = 0;
  for (std::size_t i = 1; i < loops.size(); ++i)
    if (signed_area(loops[i]) > signed_area(loops[best])) best = i;
  vp.polygon = SimplePolygon(std::move(loops[best]));
  vp.windows = windows_of(vp, p);
  return vp;
}

std::vector<Interval> visible_intervals(const SimplePolygon& p, const Point& x,
                                        const Segment& s) {
  std::vector<Interval> hidden;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Segment f = p.edge(i);
    const int ox = sgn(cross(f.a, f.b, x));
    if (ox == 0) continue;
    const Rational g0 = cross(f.a, f.b, s.a), g1 = cross(f.a, f.b, s.b);
    if (sgn(g0) == 0 && sgn(g1) == 0) continue;
    Rational lo = 0, hi = 1;
    // Beyond the edge's line, seen from x.
    if (!clip_linear(-ox * g0, -ox * g1, lo, hi)) continue;
    // Inside the cone from x spanned by the edge.
    const int sa = sgn(cross(x, f.a, f.b));
    if (!clip_linear(sa * cross(x, f.a, s.a), sa * cross(x, f.a, s.b), lo, hi)) continue;
    const int sb = sgn(cross(x, f.b, f.a));
    if (!clip_linear(sb * cross(x, f.b, s.a), sb * cross(x, f.b, s.b), lo, hi)) continue;
    hidden.emplace_back(lo, hi);
  }
  return complement_intervals(hidden);
}

bool sees_segment(const SimplePolygon& p, const Point& x, const Segment& s) {
  return !visible_intervals(p, x, s).empty();
}

bool points_visible(const SimplePolygon& p, const Point& a, const Point& b) {
  return segment_in_closed_polygon(p, a, b);
}

Region weak_visibility_polygon(const SimplePolygon& p, const Segment& s) {
  if (s.a == s.b) throw Error(ErrorCode::SegmentOutsidePolygon, "degenerate source segment");
  if (!segment_in_closed_polygon(p, s.a, s.b))
    throw Error(ErrorCode::SegmentOutsidePolygon, "source segment leaves the polygon");

  // Window candidates: extensions beyond a reflex vertex of a sight line
  // from a point of s through that vertex, where the line is pinned by two
  // of {s endpoints, reflex vertices}.
  std::vector<Point> keys{s.a, s.b};
  std::vector<bool> reflex{false, false};
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.is_reflex(i)) continue;
    keys.push_back(p[i]);
    reflex.push_back(true);
  }
  std::set<std::pair<Point, Point>> cut_set;
  std::vector<Segment> cuts;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      const Point& u = keys[i];
      const Point& w = keys[j];
      if (u == w) continue;
      const bool along_s = sgn(cross(u, w, s.a)) == 0 && sgn(cross(u, w, s.b)) == 0;
      Point c;
      if (along_s) {
      } else if (u == s.a || u == s.b) {
        c = u;
      } else if (w == s.a || w == s.b) {
        c = w;
      } else if (!line_intersection(u, w, s.a, s.b, c)) {
        continue;
      }
      if (!along_s && !on_segment(c, s)) continue;
      for (std::size_t k : {i, j}) {
        const Point& v = keys[k];
        if (!reflex[k]) continue;
        if (along_s) {
          if (on_segment(v, s)) continue;
          c = sgn(param_on_segment(s.a, s.b, v)) < 0 ? s.a : s.b;
        }
        if (v == c) continue;
        if (!segment_in_closed_polygon(p, c, v)) continue;
        const Point beyond{2 * v.x - c.x, 2 * v.y - c.y};
        const Point exit = ray_exit(p, v, beyond);
        if (exit == v) continue;
        if (cut_set.insert({v, exit}).second) cuts.push_back({v, exit});
      }
    }
  }

  for (const auto& [e, o] : {std::pair{s.a, s.b}, std::pair{s.b, s.a}}) {
    const Point exit = ray_exit(p, e, Point{2 * e.x - o.x, 2 * e.y - o.y});
    if (exit != e && cut_set.insert({e, exit}).second) cuts.push_back({e, exit});
  }

  std::vector<convex::Ring> pieces;
  const Region whole(p);
  for (const auto& part : whole.parts()) pieces.push_back(part.vertices());
  for (const Segment& cut : cuts) {
    std::vector<convex::Ring> next;
    next.reserve(pieces.size() + 4);
    for (auto& piece : pieces) {
      bool left = false, right = false;
      for (const Point& v : piece) {
        const int sd = sgn(cross(cut.a, cut.b, v));
        left |= sd > 0;
        right |= sd < 0;
      }
      bool split = left && right;
      if (split) {
        // The open cut must actually pass through this piece.
        Rational lo = 0, hi = 1;
        for (std::size_t e = 0; e < piece.size() && split; ++e) {
          const Point& a = piece[e];
          const Point& b = piece[(e + 1) % piece.size()];
          split = clip_linear(cross(a, b, cut.a), cross(a, b, cut.b), lo, hi);
        }
      }
      if (!split) {
        next.push_back(std::move(piece));
        continue;
      }
      auto l = convex::clip(piece, cut.a, cut.b);
      auto r = convex::clip(piece, cut.b, cut.a);
      if (!l.empty()) next.push_back(std::move(l));
      if (!r.empty()) next.push_back(std::move(r));
    }
    pieces = std::move(next);
  }

  std::vector<convex::Ring> seen;
  for (auto& piece : pieces)
    if (sees_segment(p, vertex_centroid(piece), s)) seen.push_back(std::move(piece));
  return Region::from_convex_parts(std::move(seen)).compacted();
}

}  // namespace mg
