#include "mg/guard.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "mg/log.hpp"

namespace mg {

namespace {

using Ring = convex::Ring;

bool on_polygon_boundary(const SimplePolygon& p, const Segment& s) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Segment e = p.edge(i);
    if (on_segment(s.a, e) && on_segment(s.b, e)) return true;
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Positive-length part of the common boundary of two convex rings that is
// not covered by any segment in `walls` (all collinear with it).
bool open_contact(const Ring& a, const Ring& b, const std::vector<Segment>& walls) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Segment ea{a[i], a[(i + 1) % a.size()]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Segment eb{b[j], b[(j + 1) % b.size()]};
      const auto x = segment_intersection(ea, eb);
      if (x.kind != SegmentIntersection::Kind::Overlap) continue;
      const Segment shared = x.overlap;
      std::vector<Interval> covered;
      for (const Segment& w : walls) {
        if (sign(cross(shared.a, shared.b, w.a)) != 0 || sign(cross(shared.a, shared.b, w.b)) != 0)
          continue;
        Rational t0 = param_on_segment(shared.a, shared.b, w.a);
        Rational t1 = param_on_segment(shared.a, shared.b, w.b);
        if (t0 > t1) std::swap(t0, t1);
        covered.emplace_back(std::max(t0, Rational(0)), std::min(t1, Rational(1)));
      }
      if (!complement_intervals(covered).empty()) return true;
    }
  }
  return false;
}

// Splits convex pieces by the line of each segment wherever the segment
// passes through the piece with positive length.
std::vector<Ring> cut_by_segments(std::vector<Ring> pieces, const std::vector<Segment>& segs) {
  for (const Segment& s : segs) {
    std::vector<Ring> next;
    next.reserve(pieces.size());
    for (auto& piece : pieces) {
      bool left = false, right = false;
      for (const Point& v : piece) {
        const int sd = sign(cross(s.a, s.b, v));
        left |= sd > 0;
        right |= sd < 0;
      }
      bool split = left && right;
      if (split) {
        Rational lo = 0, hi = 1;
        for (std::size_t e = 0; e < piece.size() && split; ++e) {
          const Point& a = piece[e];
          const Point& b = piece[(e + 1) % piece.size()];
          const Rational f0 = cross(a, b, s.a), f1 = cross(a, b, s.b), df = f1 - f0;
          if (sign(df) == 0) {
            split = sign(f0) >= 0;
          } else {
            const Rational t = -f0 / df;
            if (sign(df) > 0) lo = std::max(lo, t);
            else hi = std::min(hi, t);
            split = lo < hi;
          }
        }
      }
      if (!split) {
        next.push_back(std::move(piece));
        continue;
      }
      auto l = convex::clip(piece, s.a, s.b);
      auto r = convex::clip(piece, s.b, s.a);
      if (l.size() >= 3) next.push_back(std::move(l));
      if (r.size() >= 3) next.push_back(std::move(r));
    }
    pieces = std::move(next);
  }
  return pieces;
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Per vertex: the cells it covers.
std::vector<Bits> cover_sets(const SimplePolygon& p, const CellDecomposition& d) {
  std::vector<Bits> sets(p.size(), make_bits(d.cells.size()));
  for (std::size_t c = 0; c < d.cells.size(); ++c)
    for (std::size_t g : d.signatures[c]) set_bit(sets[g], c);
  return sets;
}

GuardSolution finish_solution(const SimplePolygon& p, const CellDecomposition& d,
                              std::vector<std::size_t> guards) {
  GuardSolution s;
  s.guards = sorted_unique(std::move(guards));
  for (std::size_t g : s.guards) s.positions.push_back(p[g]);
  s.r = d.level;
  s.kind = d.kind;
  s.cell_count = d.cells.size();
  for (std::size_t c = 0; c < d.cells.size(); ++c) {
    const auto& sig = d.signatures[c];
    std::size_t chosen = s.guards.size();
    for (std::size_t k = 0; k < s.guards.size() && chosen == s.guards.size(); ++k)
      if (std::binary_search(sig.begin(), sig.end(), s.guards[k])) chosen = k;
    if (chosen == s.guards.size())
      throw Error(ErrorCode::Internal, "cell " + std::to_string(c) + " left uncovered");
    s.certificate.push_back(chosen);
  }
  return s;
}

}  // namespace

bool GuardGraph::connected() const {
  if (nodes.size() <= 1) return true;
  UnionFind uf(nodes.size());
  for (const auto& [a, b] : edges) uf.unite(a, b);
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (uf.find(i) != uf.find(0)) return false;
  return true;
}

Region coverage_region(const SimplePolygon& p, const Point& g, int r, ReflectionKind kind) {
  const ReflectionSpec spec{all_edges(p), kind, r};
  return extend(p, g, spec).visible();
}

std::vector<Point> cell_samples(const SimplePolygon& cell) {
  const Point c = vertex_centroid(cell.vertices());
  const Point& v = cell[0];
  return {c, lerp(c, v, ratio(1, 4)), lerp(c, v, ratio(3, 4))};
}

CellDecomposition decompose(const SimplePolygon& p, int r, ReflectionKind kind,
                            const GuardOptions& options) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "negative reflection count");
  CellDecomposition d;
  d.level = r;
  d.kind = kind;

  std::vector<Region> cover;
  cover.reserve(p.size());
  std::set<std::pair<Point, Point>> seen;
  for (std::size_t g = 0; g < p.size(); ++g) {
    cover.push_back(coverage_region(p, p[g], r, kind));
    for (const auto& loop : cover.back().outline()) {
      for (std::size_t i = 0; i < loop.size(); ++i) {
        Segment s{loop[i], loop[(i + 1) % loop.size()]};
        if (s.b < s.a) std::swap(s.a, s.b);
        if (on_polygon_boundary(p, s) || !seen.insert({s.a, s.b}).second) continue;
        d.generating_segments.push_back(std::move(s));
        if (d.generating_segments.size() > options.segment_budget)
          throw Error(ErrorCode::BudgetExceeded,
                      "generating segments exceed budget of " +
                          std::to_string(options.segment_budget));
      }
    }
  }
  debug_log("decompose r=" + std::to_string(r) + ": " +
            std::to_string(d.generating_segments.size()) + " generating segments");

  std::vector<Ring> pieces;
  for (const auto& tri : triangulate(p.vertices())) pieces.push_back({p[tri[0]], p[tri[1]], p[tri[2]]});
  pieces = cut_by_segments(std::move(pieces), d.generating_segments);

  // Merge pieces that touch along boundary not lying on a generating segment.
  UnionFind uf(pieces.size());
  std::vector<Box> boxes;
  for (const auto& piece : pieces) boxes.push_back(bounding_box(piece));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (boxes[i].xmax < boxes[j].xmin || boxes[j].xmax < boxes[i].xmin ||
          boxes[i].ymax < boxes[j].ymin || boxes[j].ymax < boxes[i].ymin)
        continue;
      if (uf.find(i) == uf.find(j)) continue;
      if (open_contact(pieces[i], pieces[j], d.generating_segments)) uf.unite(i, j);
    }
  }
  std::vector<std::vector<Ring>> faces(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) faces[uf.find(i)].push_back(std::move(pieces[i]));
  for (auto& face : faces) {
    if (face.empty()) continue;
    const Region merged = Region::from_convex_parts(std::move(face)).compacted();
    for (const auto& part : merged.parts()) d.cells.push_back(part);
  }

  for (const auto& cell : d.cells) {
    const Point c = vertex_centroid(cell.vertices());
    std::vector<std::size_t> sig;
    for (std::size_t g = 0; g < p.size(); ++g)
      if (cover[g].contains(c)) sig.push_back(g);
    d.signatures.push_back(std::move(sig));
  }
  return d;
}

GuardSolution greedy_cover(const SimplePolygon& p, const CellDecomposition& d) {
  const auto sets = cover_sets(p, d);
  Bits covered = make_bits(d.cells.size());
  std::size_t remaining = d.cells.size();
  std::vector<std::size_t> guards;
  while (remaining > 0) {
    std::size_t best = p.size(), best_gain = 0;
    for (std::size_t g = 0; g < p.size(); ++g) {
      std::size_t gain = 0;
      for (std::size_t w = 0; w < covered.size(); ++w)
        gain += static_cast<std::size_t>(__builtin_popcountll(sets[g][w] & ~covered[w]));
      if (gain > best_gain) {
        best_gain = gain;
        best = g;
      }
    }
    if (best == p.size()) throw Error(ErrorCode::Internal, "cells not coverable by vertices");
    guards.push_back(best);
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= sets[best][w];
    remaining -= best_gain;
  }
  return finish_solution(p, d, std::move(guards));
}

GuardSolution greedy_cover(const SimplePolygon& p, int r, ReflectionKind kind) {
  return greedy_cover(p, decompose(p, r, kind));
}

GuardSolution optimal_cover_bruteforce(const SimplePolygon& p, const CellDecomposition& d) {
  const std::size_t n = p.size();
  if (n > 16) throw Error(ErrorCode::TooLarge, "brute force supports at most 16 vertices");
  const auto sets = cover_sets(p, d);
  Bits full = make_bits(d.cells.size());
  for (std::size_t c = 0; c < d.cells.size(); ++c) set_bit(full, c);
  // Subsets of equal size are visited in increasing lexicographic order.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    for (;;) {
      Bits acc = make_bits(d.cells.size());
      for (std::size_t g : pick)
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= sets[g][w];
      if (acc == full) return finish_solution(p, d, pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::Internal, "cells not coverable by vertices");
}

GuardSolution optimal_cover_bruteforce(const SimplePolygon& p, int r, ReflectionKind kind) {
  if (p.size() > 16) throw Error(ErrorCode::TooLarge, "brute force supports at most 16 vertices");
  return optimal_cover_bruteforce(p, decompose(p, r, kind));
}

GuardGraph build_guard_graph(const SimplePolygon& p, const GuardSolution& s) {
  GuardGraph graph;
  const std::size_t k = s.positions.size();
  for (std::size_t i = 0; i < k; ++i) graph.nodes.push_back(i);
  std::vector<Region> bounce;
  bounce.reserve(k);
  for (const Point& g : s.positions) bounce.push_back(coverage_region(p, g, 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Point& a = s.positions[i];
      const Point& b = s.positions[j];
      if (points_visible(p, a, b) || bounce[i].contains(b) || bounce[j].contains(a))
        graph.edges.emplace_back(i, j);
    }
  return graph;
}

std::size_t reduction_bound(std::size_t alpha, int r) {
  const std::size_t classes = 1 + static_cast<std::size_t>(std::max(r, 0) / 4);
  return (alpha + classes - 1) / classes;
}

GuardSolution solution_at_points(std::vector<Point> positions, int r) {
  GuardSolution s;
  s.guards.resize(positions.size());
  std::iota(s.guards.begin(), s.guards.end(), std::size_t{0});
  s.positions = std::move(positions);
  s.r = r;
  return s;
}

GuardSolution spanning_tree_reduce(const SimplePolygon& p, const GuardSolution& s, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "negative reflection count");
  if (s.positions.empty()) throw Error(ErrorCode::InvalidArgument, "empty guard set");
  const std::size_t k = s.positions.size();
  const GuardGraph graph = build_guard_graph(p, s);
  if (!graph.connected()) throw Error(ErrorCode::GraphDisconnected, "guard graph is disconnected");

  std::vector<std::vector<std::size_t>> adj(k);
  for (const auto& [a, b] : graph.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  // Positions are already sorted by guard index, so node 0 is the lowest.
  std::vector<std::size_t> level(k, k);
  std::deque<std::size_t> queue{0};
  level[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u])
      if (level[v] == k) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
  }

  const std::size_t classes = 1 + static_cast<std::size_t>(r / 4);
  std::vector<std::vector<std::size_t>> by_class(classes);
  for (std::size_t i = 0; i < k; ++i) by_class[level[i] % classes].push_back(i);
  std::size_t best = 0;
  for (std::size_t c = 1; c < classes; ++c)
    if (!by_class[c].empty() &&
        (by_class[best].empty() || by_class[c].size() < by_class[best].size()))
      best = c;

  GuardSolution out;
  out.r = r;
  out.kind = ReflectionKind::Diffuse;
  for (std::size_t i : by_class[best]) {
    out.guards.push_back(s.guards[i]);
    out.positions.push_back(s.positions[i]);
  }

  Region covered;
  for (const Point& g : out.positions) covered = region_union(covered, coverage_region(p, g, r));
  const Rational got = covered.area(), want = polygon_area(p);
  debug_log("reduce: kept " + std::to_string(out.guards.size()) + " of " + std::to_string(k) +
            ", coverage " + got.get_str() + " of " + want.get_str());
  if (got != want)
    throw Error(ErrorCode::CoverageCertificationFailed,
                "reduced guards cover " + to_wire(got) + " of " + to_wire(want));
  return out;
}

}  // namespace mg
