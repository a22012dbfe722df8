#include "mg/reflect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mg/log.hpp"

namespace mg {

namespace {

Interval interval_on(const Segment& edge, const Segment& piece) {
  Rational t0 = param_on_segment(edge.a, edge.b, piece.a);
  Rational t1 = param_on_segment(edge.a, edge.b, piece.b);
  if (t0 > t1) std::swap(t0, t1);
  return {t0, t1};
}

// a \ b for merged interval lists; positive-length pieces only.
std::vector<Interval> subtract_intervals(const std::vector<Interval>& a,
                                         const std::vector<Interval>& b) {
  std::vector<Interval> out;
  for (const auto& [lo0, hi] : a) {
    Rational lo = lo0;
    for (const auto& [blo, bhi] : b) {
      if (bhi <= lo || blo >= hi) continue;
      if (blo > lo) out.emplace_back(lo, blo);
      lo = std::max(lo, bhi);
      if (lo >= hi) break;
    }
    if (lo < hi) out.emplace_back(lo, hi);
  }
  return out;
}

void check_bits(const Segment& s, std::size_t cap) {
  for (const Point* p : {&s.a, &s.b})
    for (const Rational* c : {&p->x, &p->y})
      if (bit_length(*c) > cap)
        throw Error(ErrorCode::BitBlowup, "coordinate exceeds " + std::to_string(cap) +
                                              " bits during bounce propagation");
}

void check_edge(const SimplePolygon& p, std::size_t e) {
  if (e >= p.size())
    throw Error(ErrorCode::InvalidArgument, "edge index " + std::to_string(e) + " out of range");
}

// Shared bounce engine. `edges_at(k)` lists the edges that may reflect at
// bounce k (0-based). With `per_depth` set, illumination is deduplicated per
// (edge, depth) instead of per edge.
template <class EdgesAt>
ExtendedVisibility propagate(const SimplePolygon& p, const Point& q, int rounds,
                             EdgesAt edges_at, bool per_depth) {
  ExtendedVisibility ev;
  ev.direct = visibility_polygon(p, q);
  const Rational total = polygon_area(p);
  const std::size_t cap = bit_cap();

  std::map<std::pair<std::size_t, int>, std::vector<Interval>> lit;
  auto key = [&](std::size_t e, int depth) { return std::pair{e, per_depth ? depth : 0}; };
  std::vector<std::pair<std::size_t, Segment>> frontier;

  auto admit = [&](std::size_t e, int depth, std::vector<Interval> spans) {
    auto& seen = lit[key(e, depth)];
    const auto fresh = subtract_intervals(merge_intervals(std::move(spans)), seen);
    if (fresh.empty()) return;
    std::vector<Interval> all = seen;
    all.insert(all.end(), fresh.begin(), fresh.end());
    seen = merge_intervals(std::move(all));
    const Segment edge = p.edge(e);
    IlluminatedEdgePart part{e, {}, depth};
    for (const auto& [lo, hi] : fresh) {
      Segment s{lerp(edge.a, edge.b, lo), lerp(edge.a, edge.b, hi)};
      check_bits(s, cap);
      part.subsegments.push_back(s);
      frontier.emplace_back(e, std::move(s));
    }
    ev.illumination.push_back(std::move(part));
  };

  if (rounds > 0) {
    for (std::size_t e : edges_at(0)) {
      std::vector<Interval> spans;
      for (const Segment& s : visible_edge_parts(p, q, e)) spans.push_back(interval_on(p.edge(e), s));
      admit(e, 0, std::move(spans));
    }
  }

  Region reach;
  for (int depth = 1; depth <= rounds && !frontier.empty(); ++depth) {
    const auto current = std::move(frontier);
    frontier.clear();
    std::vector<std::size_t> targets;
    if (depth < rounds) targets = edges_at(depth);
    std::map<std::size_t, std::vector<Interval>> next;
    for (const auto& [h, seg] : current) {
      const Segment host = p.edge(h);
      const Region w = clip_half_plane(weak_visibility_polygon(p, seg), host.a, host.b);
      reach = region_union(reach, w);
      for (std::size_t e : targets) {
        if (e == h) continue;
        const Segment edge = p.edge(e);
        for (const Segment& piece : clip_segment(edge, w))
          if (piece.a != piece.b) next[e].push_back(interval_on(edge, piece));
      }
    }
    reach = reach.compacted();
    debug_log("bounce " + std::to_string(depth) + ": " + std::to_string(current.size()) +
              " sources, reach parts " + std::to_string(reach.parts().size()));
    for (auto& [e, spans] : next) admit(e, depth, std::move(spans));
    if (region_union(ev.direct.region, reach).area() == total) break;
  }
  ev.added = region_difference(reach, ev.direct.region).compacted();
  return ev;
}

}  // namespace

Region ExtendedVisibility::visible() const { return region_union(direct.region, added); }

std::vector<std::size_t> all_edges(const SimplePolygon& p) {
  std::vector<std::size_t> out(p.size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

std::vector<Segment> visible_edge_parts(const SimplePolygon& p, const Point& q, std::size_t e) {
  check_edge(p, e);
  const Segment edge = p.edge(e);
  if (sign(cross(edge.a, edge.b, q)) <= 0) return {};
  std::vector<Segment> out;
  for (const auto& [lo, hi] : visible_intervals(p, q, edge))
    out.push_back({lerp(edge.a, edge.b, lo), lerp(edge.a, edge.b, hi)});
  return out;
}

std::vector<Segment> visible_edge_parts(const SimplePolygon& p, const Region& src, std::size_t e) {
  check_edge(p, e);
  const Segment edge = p.edge(e);
  std::vector<Interval> spans;
  for (const Segment& s : clip_segment(edge, src)) spans.push_back(interval_on(edge, s));
  // A point sees the region iff it sees a point of some part boundary.
  for (const auto& loop : src.outline()) {
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Segment b{loop[i], loop[(i + 1) % loop.size()]};
      for (const Segment& s : clip_segment(edge, weak_visibility_polygon(p, b)))
        spans.push_back(interval_on(edge, s));
    }
  }
  std::vector<Segment> out;
  for (const auto& [lo, hi] : merge_intervals(std::move(spans)))
    out.push_back({lerp(edge.a, edge.b, lo), lerp(edge.a, edge.b, hi)});
  return out;
}

ExtendedVisibility diffuse_extend(const SimplePolygon& p, const Point& q,
                                  const ReflectionSpec& spec) {
  if (spec.kind != ReflectionKind::Diffuse)
    throw Error(ErrorCode::SpecMismatch, "diffuse_extend requires a diffuse reflection spec");
  if (spec.max_bounces < 0) throw Error(ErrorCode::InvalidArgument, "negative bounce count");
  for (std::size_t e : spec.edges) check_edge(p, e);
  std::vector<std::size_t> edges = spec.edges;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return propagate(p, q, spec.max_bounces, [&](int) { return edges; }, false);
}

ExtendedVisibility diffuse_extend_sequence(const SimplePolygon& p, const Point& q,
                                           const std::vector<std::size_t>& sequence) {
  for (std::size_t e : sequence) check_edge(p, e);
  return propagate(
      p, q, static_cast<int>(sequence.size()),
      [&](int k) { return std::vector<std::size_t>{sequence[static_cast<std::size_t>(k)]}; },
      true);
}

ExtendedVisibility specular_extend_single(const SimplePolygon& p, const Point& q,
                                          std::size_t e) {
  check_edge(p, e);
  const Segment mirror = p.edge(e);
  ExtendedVisibility ev;
  ev.direct = visibility_polygon(p, q);
  if (sign(cross(mirror.a, mirror.b, q)) == 0)
    throw Error(ErrorCode::SourceOnMirrorLine, "source lies on the mirror line");
  const auto parts = visible_edge_parts(p, q, e);
  if (parts.empty()) return ev;
  ev.illumination.push_back({e, parts, 0});

  const Point image = reflect_across_line(q, mirror.a, mirror.b);
  std::vector<convex::Ring> wedges;
  for (const Segment& s : parts) wedges.push_back(shadow_cone(p, image, s.a, s.b));
  Region lit = region_intersection(Region(p), Region::from_convex_parts(std::move(wedges)));

  // The reflected leg starts on the mirror, so only obstacles on its inner
  // side matter.
  const Region inner_box = [&] {
    const Box box = bounding_box(p.vertices());
    const Rational pad = (box.xmax - box.xmin) + (box.ymax - box.ymin) + 1;
    std::vector<Point> ring{{box.xmin - pad, box.ymin - pad},
                            {box.xmax + pad, box.ymin - pad},
                            {box.xmax + pad, box.ymax + pad},
                            {box.xmin - pad, box.ymax + pad}};
    return clip_half_plane(Region::from_convex_parts({ring}), mirror.a, mirror.b);
  }();
  for (std::size_t f = 0; f < p.size() && !lit.empty(); ++f) {
    if (f == e) continue;
    for (const Segment& s : clip_segment(p.edge(f), inner_box)) {
      if (s.a == s.b || sign(cross(s.a, s.b, image)) == 0) continue;
      lit = region_difference(lit, Region::from_convex_parts({shadow_cone(p, image, s.a, s.b)}));
    }
  }
  ev.added = region_difference(lit, ev.direct.region).compacted();
  return ev;
}

ExtendedVisibility extend(const SimplePolygon& p, const Point& q, const ReflectionSpec& spec) {
  if (spec.kind == ReflectionKind::Diffuse) return diffuse_extend(p, q, spec);
  if (spec.max_bounces > 1)
    throw Error(ErrorCode::SpecMismatch, "specular reflection supports at most one bounce");
  for (std::size_t e : spec.edges) check_edge(p, e);
  ExtendedVisibility ev;
  ev.direct = visibility_polygon(p, q);
  if (spec.max_bounces == 0) return ev;
  for (std::size_t e : spec.edges) {
    auto single = specular_extend_single(p, q, e);
    ev.added = region_union(ev.added, single.added);
    for (auto& part : single.illumination) ev.illumination.push_back(std::move(part));
  }
  ev.added = ev.added.compacted();
  return ev;
}

Rational added_area(const ExtendedVisibility& ev) { return ev.added.area(); }

}  // namespace mg
