#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mg/geom.hpp"
#include "mg/region.hpp"

namespace mg {

struct Funnel {
  SimplePolygon polygon;
  std::size_t chord = 0;  // edge u -> v
  std::size_t apex = 0;
  std::vector<std::size_t> left_chain;   // u, ..., apex (clockwise from u)
  std::vector<std::size_t> right_chain;  // v, ..., apex (counterclockwise from v)

  std::size_t u() const { return chord; }
  std::size_t v() const { return (chord + 1) % polygon.size(); }
};

/// Throws NotAFunnel naming the offending vertex.
Funnel detect_funnel(const SimplePolygon& p);

struct TangentQuadruple {
  Point p1, p2, p3, p4;
  bool left_closer = true;  // q is nearer the left chain; roles swap otherwise
  std::vector<std::size_t> p1_edges, p2_edges, p3_edges, p4_edges;  // edges containing each
};

/// With C the chain nearer to q and D the other one: p1 is the uppermost
/// vertex of C seen by q, p2 is where the ray q -> p1 meets the boundary
/// again, p3 is the lowermost vertex of D seen by q and p4 the lowermost
/// vertex of C seen by q. Throws QueryOutsidePolygon for exterior q.
TangentQuadruple funnel_tangents(const Funnel& f, const Point& q);

/// Edges containing p1..p4, ascending, chord excluded unless requested.
std::vector<std::size_t> tangent_candidate_edges(const Funnel& f, const TangentQuadruple& t,
                                                 bool include_chord = false);

struct MirrorChoice {
  std::vector<std::size_t> edges;
  Rational added;  // area added to VP(q) by one diffuse bounce off `edges`
  bool full_coverage = false;
  std::vector<std::size_t> candidates;
  std::size_t subsets_evaluated = 0;
};

/// Smallest candidate subset making F fully visible with one diffuse bounce,
/// or the largest-area subset when none does.
MirrorChoice funnel_best_mirrors(const Funnel& f, const Point& q, bool include_chord = false);

struct SingleEdgeReport {
  std::size_t edge = 0;
  std::vector<Rational> added_per_edge;
  bool certified = false;  // chord adds at least as much as every other edge
};

/// Throws NotWeaklyVisible unless WVP(chord) = P.
SingleEdgeReport wvp_best_single_edge(const SimplePolygon& p, std::size_t chord, const Point& q);

struct ThreeReflectionReport {
  std::vector<std::size_t> sequence;  // chord, edge au, chord
  std::size_t samples = 0;
  std::size_t covered = 0;
  bool au_sees_v = false;
  bool certified = false;
};

/// Throws NotWeaklyVisible unless WVP(chord) = P.
ThreeReflectionReport wvp_three_reflection_cover(const SimplePolygon& p, std::size_t chord,
                                                 std::size_t samples = 20,
                                                 std::uint64_t seed = 1);

/// WVP(edge) has the full area of p.
bool weakly_visible_from_edge(const SimplePolygon& p, std::size_t edge);

}  // namespace mg
