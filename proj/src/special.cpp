#include "mg/special.hpp"

#include <algorithm>
#include <string>

#include "mg/random_polygons.hpp"
#include "mg/reflect.hpp"
#include "mg/visibility.hpp"

namespace mg {

namespace {

std::vector<std::size_t> edges_containing(const SimplePolygon& p, const Point& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (on_segment(x, p.edge(i))) out.push_back(i);
  return out;
}

// Uppermost (last in walk order) and lowermost chain vertices seen by q.
Point upper_contact(const SimplePolygon& p, const std::vector<std::size_t>& chain, const Point& q) {
  Point best = p[chain.front()];
  for (std::size_t idx : chain)
    if (points_visible(p, q, p[idx])) best = p[idx];
  return best;
}

Point lower_contact(const SimplePolygon& p, const std::vector<std::size_t>& chain, const Point& q) {
  for (std::size_t idx : chain)
    if (points_visible(p, q, p[idx])) return p[idx];
  return p[chain.back()];
}

Rational squared_distance(const Point& q, const Segment& s) {
  const Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  Rational t = ((q.x - s.a.x) * dx + (q.y - s.a.y) * dy) / (dx * dx + dy * dy);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Rational ex = s.a.x + t * dx - q.x, ey = s.a.y + t * dy - q.y;
  return ex * ex + ey * ey;
}

Rational chain_distance(const SimplePolygon& p, const std::vector<std::size_t>& chain,
                        const Point& q) {
  Rational best = -1;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Rational d = squared_distance(q, {p[chain[i]], p[chain[i + 1]]});
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Point continue_ray(const SimplePolygon& p, const Point& q, const Point& through) {
  return ray_exit(p, through, Point{2 * through.x - q.x, 2 * through.y - q.y});
}

void require_weak_visibility(const SimplePolygon& p, std::size_t chord) {
  if (chord >= p.size()) throw Error(ErrorCode::InvalidArgument, "chord index out of range");
  if (!weakly_visible_from_edge(p, chord))
    throw Error(ErrorCode::NotWeaklyVisible,
                "polygon is not weakly visible from edge " + std::to_string(chord));
}

}  // namespace

Funnel detect_funnel(const SimplePolygon& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> convex;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.is_reflex(i)) continue;
    convex.push_back(i);
    if (convex.size() > 3)
      throw Error(ErrorCode::NotAFunnel,
                  "vertex " + std::to_string(i) + " is a fourth convex vertex");
  }
  if (convex.size() != 3)
    throw Error(ErrorCode::NotAFunnel, "polygon has fewer than three convex vertices");
  // The chord starts at the lowest-index convex vertex whose successor is convex.
  for (std::size_t c : convex) {
    const std::size_t next = (c + 1) % n;
    if (std::find(convex.begin(), convex.end(), next) == convex.end()) continue;
    Funnel f;
    f.polygon = p;
    f.chord = c;
    for (std::size_t w : convex)
      if (w != c && w != next) f.apex = w;
    for (std::size_t i = next;; i = (i + 1) % n) {
      f.right_chain.push_back(i);
      if (i == f.apex) break;
    }
    for (std::size_t i = c;; i = (i + n - 1) % n) {
      f.left_chain.push_back(i);
      if (i == f.apex) break;
    }
    return f;
  }
  throw Error(ErrorCode::NotAFunnel,
              "no two convex vertices are adjacent (vertex " + std::to_string(convex[0]) + ")");
}

TangentQuadruple funnel_tangents(const Funnel& f, const Point& q) {
  const SimplePolygon& p = f.polygon;
  if (point_in_polygon(q, p) == Location::Exterior)
    throw Error(ErrorCode::QueryOutsidePolygon, "query point lies outside the funnel");
  TangentQuadruple t;
  t.left_closer = chain_distance(p, f.left_chain, q) <= chain_distance(p, f.right_chain, q);
  const auto& near = t.left_closer ? f.left_chain : f.right_chain;
  const auto& far = t.left_closer ? f.right_chain : f.left_chain;
  t.p1 = upper_contact(p, near, q);
  t.p2 = continue_ray(p, q, t.p1);
  t.p3 = lower_contact(p, far, q);
  t.p4 = lower_contact(p, near, q);
  t.p1_edges = edges_containing(p, t.p1);
  t.p2_edges = edges_containing(p, t.p2);
  t.p3_edges = edges_containing(p, t.p3);
  t.p4_edges = edges_containing(p, t.p4);
  return t;
}

std::vector<std::size_t> tangent_candidate_edges(const Funnel& f, const TangentQuadruple& t,
                                                 bool include_chord) {
  std::vector<std::size_t> out;
  for (const auto* list : {&t.p1_edges, &t.p2_edges, &t.p3_edges, &t.p4_edges})
    out.insert(out.end(), list->begin(), list->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!include_chord) out.erase(std::remove(out.begin(), out.end(), f.chord), out.end());
  if (out.size() > 8 + (include_chord ? 1 : 0))
    throw Error(ErrorCode::Internal, "more than eight tangent candidate edges");
  return out;
}

MirrorChoice funnel_best_mirrors(const Funnel& f, const Point& q, bool include_chord) {
  const SimplePolygon& p = f.polygon;
  MirrorChoice best;
  best.candidates = tangent_candidate_edges(f, funnel_tangents(f, q), include_chord);
  if (include_chord && std::find(best.candidates.begin(), best.candidates.end(), f.chord) ==
                           best.candidates.end()) {
    best.candidates.push_back(f.chord);
    std::sort(best.candidates.begin(), best.candidates.end());
  }
  const std::size_t k = best.candidates.size();
  const Rational total = polygon_area(p);

  // One bounce: the extension by a set is the union of single-edge extensions.
  const VisibilityPolygon vp = visibility_polygon(p, q);
  std::vector<Region> single;
  for (std::size_t e : best.candidates)
    single.push_back(diffuse_extend(p, q, {{e}, ReflectionKind::Diffuse, 1}).added);

  const Rational direct = vp.region.area();
  best.added = 0;
  best.full_coverage = direct == total;
  if (best.full_coverage) {
    best.subsets_evaluated = 1;
    return best;
  }
  bool have = false;
  for (std::size_t size = 1; size <= k && !best.full_coverage; ++size) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      ++best.subsets_evaluated;
      Region acc;
      std::vector<std::size_t> edges;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) {
          acc = region_union(acc, single[i]);
          edges.push_back(best.candidates[i]);
        }
      const Rational added = acc.area();
      if (!have || added > best.added) {
        have = true;
        best.added = added;
        best.edges = edges;
      }
      if (direct + added == total) {
        best.added = added;
        best.edges = std::move(edges);
        best.full_coverage = true;
        break;
      }
    }
  }
  return best;
}

bool weakly_visible_from_edge(const SimplePolygon& p, std::size_t edge) {
  const Segment s = p.edge(edge);
  return weak_visibility_polygon(p, s).area() == polygon_area(p);
}

SingleEdgeReport wvp_best_single_edge(const SimplePolygon& p, std::size_t chord, const Point& q) {
  require_weak_visibility(p, chord);
  SingleEdgeReport report;
  report.edge = chord;
  for (std::size_t e = 0; e < p.size(); ++e)
    report.added_per_edge.push_back(
        diffuse_extend(p, q, {{e}, ReflectionKind::Diffuse, 1}).added.area());
  report.certified = std::all_of(report.added_per_edge.begin(), report.added_per_edge.end(),
                                 [&](const Rational& a) { return a <= report.added_per_edge[chord]; });
  return report;
}

ThreeReflectionReport wvp_three_reflection_cover(const SimplePolygon& p, std::size_t chord,
                                                 std::size_t samples, std::uint64_t seed) {
  require_weak_visibility(p, chord);
  const std::size_t n = p.size();
  const std::size_t au = (chord + n - 1) % n;
  ThreeReflectionReport report;
  report.sequence = {chord, au, chord};
  report.au_sees_v = sees_segment(p, p[chord + 1], p.edge(au));
  const Rational total = polygon_area(p);
  for (const Point& q : random_interior_points(p, samples, seed)) {
    ++report.samples;
    if (diffuse_extend_sequence(p, q, report.sequence).visible().area() == total) ++report.covered;
  }
  report.certified = report.covered == report.samples;
  return report;
}

}  // namespace mg
