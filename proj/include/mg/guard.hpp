#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mg/geom.hpp"
#include "mg/reflect.hpp"
#include "mg/region.hpp"

namespace mg {

struct CellDecomposition {
  int level = 0;
  ReflectionKind kind = ReflectionKind::Diffuse;
  std::vector<SimplePolygon> cells;  // convex, interior-disjoint, union = P
  std::vector<Segment> generating_segments;
  std::vector<std::vector<std::size_t>> signatures;  // per cell: vertices covering it
};

struct GuardSolution {
  std::vector<std::size_t> guards;  // vertex indices, ascending
  std::vector<Point> positions;     // guard locations (vertices unless built otherwise)
  int r = 0;
  ReflectionKind kind = ReflectionKind::Diffuse;
  std::vector<std::size_t> certificate;  // per cell: position index in `guards` covering it
  std::size_t cell_count = 0;
};

struct GuardGraph {
  std::vector<std::size_t> nodes;  // indices into the solution's positions
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool connected() const;
};

struct GuardOptions {
  std::size_t segment_budget = 1'000'000;
};

/// Region seen from g with r reflections off every edge.
/// Specular allows r <= 1.
Region coverage_region(const SimplePolygon& p, const Point& g, int r,
                       ReflectionKind kind = ReflectionKind::Diffuse);

/// Convex cells on which the set of covering vertices is constant.
/// Throws BudgetExceeded.
CellDecomposition decompose(const SimplePolygon& p, int r,
                            ReflectionKind kind = ReflectionKind::Diffuse,
                            const GuardOptions& options = {});

/// Three deterministic sample points of a convex cell: centroid, then 1/4 and
/// 3/4 of the way from the centroid to vertex 0.
std::vector<Point> cell_samples(const SimplePolygon& cell);

GuardSolution greedy_cover(const SimplePolygon& p, const CellDecomposition& d);
GuardSolution greedy_cover(const SimplePolygon& p, int r,
                           ReflectionKind kind = ReflectionKind::Diffuse);

/// Minimum-cardinality vertex cover of the cells. Throws TooLarge for n > 16.
GuardSolution optimal_cover_bruteforce(const SimplePolygon& p, const CellDecomposition& d);
GuardSolution optimal_cover_bruteforce(const SimplePolygon& p, int r,
                                       ReflectionKind kind = ReflectionKind::Diffuse);

/// Edge between two positions iff they see each other directly or one lies
/// in the other's one-bounce diffuse region (all edges reflective).
GuardGraph build_guard_graph(const SimplePolygon& p, const GuardSolution& s);

/// BFS spanning tree from the lowest guard; keeps the smallest class of tree
/// levels modulo 1 + floor(r/4), then certifies r-bounce coverage of P.
/// Throws GraphDisconnected, CoverageCertificationFailed.
GuardSolution spanning_tree_reduce(const SimplePolygon& p, const GuardSolution& s, int r);

/// ceil(alpha / (1 + floor(r / 4))).
std::size_t reduction_bound(std::size_t alpha, int r);

/// Guard solution placed at arbitrary points (e.g. edge midpoints); `guards`
/// holds 0..k-1.
GuardSolution solution_at_points(std::vector<Point> positions, int r = 0);

}  // namespace mg
