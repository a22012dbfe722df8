#pragma once

#include <cstddef>
#include <vector>

#include "mg/geom.hpp"
#include "mg/region.hpp"
#include "mg/visibility.hpp"

namespace mg {

enum class ReflectionKind { Diffuse, Specular };

struct ReflectionSpec {
  std::vector<std::size_t> edges;  // reflecting edge indices
  ReflectionKind kind = ReflectionKind::Diffuse;
  int max_bounces = 1;
};

struct IlluminatedEdgePart {
  std::size_t edge = 0;
  std::vector<Segment> subsegments;  // disjoint, on the host edge
  int depth = 0;                     // bounces the light made before reaching this edge
};

struct ExtendedVisibility {
  VisibilityPolygon direct;
  Region added;  // interior-disjoint from direct.region
  std::vector<IlluminatedEdgePart> illumination;

  /// direct ∪ added.
  Region visible() const;
};

/// Maximal pieces of edge e whose relative interior is seen from q on the
/// inner side of e. Empty if q is on or outside the line of e.
std::vector<Segment> visible_edge_parts(const SimplePolygon& p, const Point& q, std::size_t e);

/// Pieces of edge e seen from at least one point of src.
std::vector<Segment> visible_edge_parts(const SimplePolygon& p, const Region& src, std::size_t e);

/// Diffuse bounces off spec.edges up to spec.max_bounces.
/// Throws SpecMismatch, BitBlowup, InvalidArgument.
ExtendedVisibility diffuse_extend(const SimplePolygon& p, const Point& q,
                                  const ReflectionSpec& spec);

/// Diffuse light following a fixed bounce order: bounce k happens on
/// sequence[k]. The result covers every intermediate depth.
ExtendedVisibility diffuse_extend_sequence(const SimplePolygon& p, const Point& q,
                                           const std::vector<std::size_t>& sequence);

/// One mirror bounce off edge e. Throws SourceOnMirrorLine.
ExtendedVisibility specular_extend_single(const SimplePolygon& p, const Point& q,
                                          std::size_t e);

/// Dispatch on spec.kind. Specular accepts at most one bounce; several edges
/// give the union of their single-bounce extensions.
ExtendedVisibility extend(const SimplePolygon& p, const Point& q, const ReflectionSpec& spec);

Rational added_area(const ExtendedVisibility& ev);

/// Every edge index of p.
std::vector<std::size_t> all_edges(const SimplePolygon& p);

}  // namespace mg
