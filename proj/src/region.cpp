#include "mg/region.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mg {

namespace convex {

Ring clip(const Ring& poly, const Point& a, const Point& b) {
  Ring out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 2);
  std::vector<int> side(n);
  bool all_in = true;
  for (std::size_t i = 0; i < n; ++i) {
    side[i] = sgn(cross(a, b, poly[i]));
    if (side[i] < 0) all_in = false;
  }
  if (all_in) return poly;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (side[i] >= 0) out.push_back(poly[i]);
    if (side[i] * side[j] < 0) {
      Point x;
      line_intersection(poly[i], poly[j], a, b, x);
      out.push_back(std::move(x));
    }
  }
  out = normalize_ring(std::move(out));
  if (out.size() < 3) out.clear();
  return out;
}

bool contains(const Ring& poly, const Point& p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(cross(poly[i], poly[(i + 1) % n], p)) < 0) return false;
  return n >= 3;
}

namespace {

bool edges_separate(const Ring& a, const Ring& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = a[i];
    const Point& q = a[(i + 1) % n];
    bool all_out = true;
    for (const Point& v : b) {
      if (sgn(cross(p, q, v)) > 0) {
        all_out = false;
        break;
      }
    }
    if (all_out) return true;
  }
  return false;
}

}  // namespace

bool separated(const Ring& a, const Ring& b) {
  const Box ba = bounding_box(a), bb = bounding_box(b);
  if (ba.xmax <= bb.xmin || bb.xmax <= ba.xmin || ba.ymax <= bb.ymin || bb.ymax <= ba.ymin)
    return true;
  return edges_separate(a, b) || edges_separate(b, a);
}

Ring intersect(const Ring& a, const Ring& b) {
  if (separated(a, b)) return {};
  Ring cur = a;
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n && !cur.empty(); ++i) cur = clip(cur, b[i], b[(i + 1) % n]);
  return cur;
}

std::vector<Ring> subtract(const Ring& a, const Ring& b) {
  if (separated(a, b)) return {a};
  std::vector<Ring> pieces;
  Ring cur = a;
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n && !cur.empty(); ++i) {
    const Point& p = b[i];
    const Point& q = b[(i + 1) % n];
    Ring outside = clip(cur, q, p);
    if (!outside.empty()) pieces.push_back(std::move(outside));
    cur = clip(cur, p, q);
  }
  return pieces;
}

}  // namespace convex

namespace {

using convex::Ring;

// Greedy merge of convex rings that share a full edge, keeping convexity.
std::vector<Ring> merge_convex(std::vector<Ring> rings) {
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (std::size_t i = 0; i < rings.size() && !merged_any; ++i) {
      const Ring& ri = rings[i];
      for (std::size_t j = i + 1; j < rings.size() && !merged_any; ++j) {
        const Ring& rj = rings[j];
        for (std::size_t k = 0; k < ri.size() && !merged_any; ++k) {
          const Point& u = ri[k];
          const Point& w = ri[(k + 1) % ri.size()];
          for (std::size_t l = 0; l < rj.size(); ++l) {
            if (rj[l] != w || rj[(l + 1) % rj.size()] != u) continue;
            Ring m;
            for (std::size_t s = 0; s < ri.size(); ++s) m.push_back(ri[(k + 1 + s) % ri.size()]);
            for (std::size_t s = 2; s < rj.size(); ++s) m.push_back(rj[(l + s) % rj.size()]);
            m = normalize_ring(std::move(m));
            if (ring_is_convex(m)) {
              rings[i] = std::move(m);
              rings.erase(rings.begin() + static_cast<std::ptrdiff_t>(j));
              merged_any = true;
            }
            break;
          }
        }
      }
    }
  }
  return rings;
}

std::vector<Ring> convex_decompose(const std::vector<Point>& ring) {
  std::vector<Ring> tris;
  for (const auto& t : triangulate(ring)) tris.push_back({ring[t[0]], ring[t[1]], ring[t[2]]});
  return merge_convex(std::move(tris));
}

struct DirLess {
  // Orders candidate outgoing directions by CCW turn angle from `in`.
  Point in;
  int cls(const Point& d) const {
    const Rational c = in.x * d.y - in.y * d.x;
    const Rational dot = in.x * d.x + in.y * d.y;
    if (sgn(c) < 0) return 0;
    if (sgn(c) == 0) return sgn(dot) > 0 ? 1 : 3;
    return 2;
  }
  bool operator()(const Point& d1, const Point& d2) const {
    const int c1 = cls(d1), c2 = cls(d2);
    if (c1 != c2) return c1 < c2;
    return sgn(d1.x * d2.y - d1.y * d2.x) > 0;
  }
};

}  // namespace

Region::Region(const SimplePolygon& polygon) {
  for (auto& r : convex_decompose(polygon.vertices()))
    parts_.emplace_back(std::move(r), SimplePolygon::Unchecked{});
}

Region Region::from_convex_parts(std::vector<std::vector<Point>> parts) {
  Region out;
  for (auto& p : parts) {
    auto ring = normalize_ring(std::move(p));
    if (ring.size() < 3 || sgn(signed_area(ring)) <= 0) continue;
    out.parts_.emplace_back(std::move(ring), SimplePolygon::Unchecked{});
  }
  return out;
}

Rational Region::area() const {
  Rational a = 0;
  for (const auto& p : parts_) a += polygon_area(p);
  return a;
}

bool Region::contains(const Point& p) const {
  for (const auto& part : parts_)
    if (convex::contains(part.vertices(), p)) return true;
  return false;
}

std::vector<std::vector<Point>> Region::outline() const {
  std::set<Point> verts;
  for (const auto& part : parts_)
    for (const auto& v : part.vertices()) verts.insert(v);

  // Net multiplicity of each elementary edge, keyed by (min, max).
  std::map<std::pair<Point, Point>, int> net;
  for (const auto& part : parts_) {
    const auto& r = part.vertices();
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& a = r[i];
      const Point& b = r[(i + 1) % r.size()];
      const Point lo = std::min(a, b), hi = std::max(a, b);
      std::vector<Point> inner;
      for (auto it = verts.upper_bound(lo); it != verts.end() && *it < hi; ++it)
        if (sgn(cross(lo, hi, *it)) == 0) inner.push_back(*it);
      Point prev = lo;
      const int dir = a < b ? 1 : -1;
      for (const Point& p : inner) {
        net[{prev, p}] += dir;
        prev = p;
      }
      net[{prev, hi}] += dir;
    }
  }

  std::multimap<Point, Point> out_edges;
  for (const auto& [key, count] : net) {
    if (count > 0) out_edges.emplace(key.first, key.second);
    else if (count < 0) out_edges.emplace(key.second, key.first);
  }

  std::vector<std::vector<Point>> loops;
  while (!out_edges.empty()) {
    auto first = out_edges.begin();
    const Point start = first->first;
    Point prev = start;
    Point cur = first->second;
    out_edges.erase(first);
    std::vector<Point> loop{start};
    std::size_t guard = 0;
    while (cur != start) {
      loop.push_back(cur);
      auto [lo, hi] = out_edges.equal_range(cur);
      if (lo == hi || ++guard > net.size() + 1) break;  // open chain: malformed input
      DirLess less{{cur.x - prev.x, cur.y - prev.y}};
      auto best = lo;
      for (auto it = std::next(lo); it != hi; ++it) {
        const Point d_best{best->second.x - cur.x, best->second.y - cur.y};
        const Point d_it{it->second.x - cur.x, it->second.y - cur.y};
        if (less(d_best, d_it)) best = it;
      }
      prev = cur;
      cur = best->second;
      out_edges.erase(best);
    }
    loop = normalize_ring(std::move(loop));
    if (loop.size() >= 3) loops.push_back(std::move(loop));
  }
  return loops;
}

Region Region::compacted() const {
  if (parts_.size() <= 1) return *this;
  auto loops = outline();
  std::vector<Ring> rings;
  for (const auto& loop : loops) {
    if (signed_area(loop) < 0 || !ring_is_simple(loop)) return *this;
  }
  for (const auto& loop : loops)
    for (auto& r : convex_decompose(loop)) rings.push_back(std::move(r));
  Region out = from_convex_parts(std::move(rings));
  if (out.area() != area()) return *this;
  return out.parts_.size() < parts_.size() ? out : *this;
}

namespace {

Region compact_if_fragmented(Region r, std::size_t baseline) {
  if (r.parts().size() > baseline + 4) return r.compacted();
  return r;
}

std::vector<Ring> rings_of(const Region& r) {
  std::vector<Ring> out;
  out.reserve(r.parts().size());
  for (const auto& p : r.parts()) out.push_back(p.vertices());
  return out;
}

}  // namespace

Region region_difference(const Region& a, const Region& b) {
  if (a.empty() || b.empty()) return a;
  std::vector<Ring> result;
  const auto bs = rings_of(b);
  for (const auto& part : a.parts()) {
    std::vector<Ring> pieces{part.vertices()};
    for (const auto& cut : bs) {
      std::vector<Ring> next;
      for (const auto& piece : pieces)
        for (auto& r : convex::subtract(piece, cut)) next.push_back(std::move(r));
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    for (auto& r : pieces) result.push_back(std::move(r));
  }
  return compact_if_fragmented(Region::from_convex_parts(std::move(result)), a.parts().size());
}

Region region_union(const Region& a, const Region& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  auto rest = region_difference(b, a);
  std::vector<Ring> all = rings_of(a);
  for (auto& r : rings_of(rest)) all.push_back(std::move(r));
  return compact_if_fragmented(Region::from_convex_parts(std::move(all)),
                               std::max(a.parts().size(), b.parts().size()));
}

Region region_intersection(const Region& a, const Region& b) {
  std::vector<Ring> out;
  const auto bs = rings_of(b);
  for (const auto& part : a.parts())
    for (const auto& r : bs) {
      auto x = convex::intersect(part.vertices(), r);
      if (!x.empty()) out.push_back(std::move(x));
    }
  return compact_if_fragmented(Region::from_convex_parts(std::move(out)), a.parts().size());
}

Region clip_half_plane(const Region& r, const Point& a, const Point& b) {
  std::vector<Ring> out;
  for (const auto& part : r.parts()) {
    auto x = convex::clip(part.vertices(), a, b);
    if (!x.empty()) out.push_back(std::move(x));
  }
  return Region::from_convex_parts(std::move(out));
}

std::vector<Segment> clip_segment(const Segment& s, const Region& r) {
  std::vector<std::pair<Rational, Rational>> spans;
  for (const auto& part : r.parts()) {
    Rational lo = 0, hi = 1;
    const auto& ring = part.vertices();
    bool empty = false;
    for (std::size_t i = 0; i < ring.size() && !empty; ++i) {
      const Point& p = ring[i];
      const Point& q = ring[(i + 1) % ring.size()];
      // f(t) = f0 + t (f1 - f0) >= 0
      const Rational f0 = cross(p, q, s.a), f1 = cross(p, q, s.b);
      const Rational df = f1 - f0;
      if (sgn(df) == 0) {
        if (sgn(f0) < 0) empty = true;
        continue;
      }
      const Rational t = -f0 / df;
      if (sgn(df) > 0) {
        if (t > lo) lo = t;
      } else if (t < hi) {
        hi = t;
      }
      if (lo >= hi) empty = true;
    }
    if (!empty && lo < hi) spans.emplace_back(lo, hi);
  }
  std::sort(spans.begin(), spans.end());
  std::vector<Segment> out;
  for (std::size_t i = 0; i < spans.size();) {
    Rational lo = spans[i].first, hi = spans[i].second;
    std::size_t j = i + 1;
    while (j < spans.size() && spans[j].first <= hi) {
      if (spans[j].second > hi) hi = spans[j].second;
      ++j;
    }
    out.push_back({lerp(s.a, s.b, lo), lerp(s.a, s.b, hi)});
    i = j;
  }
  return out;
}

}  // namespace mg
