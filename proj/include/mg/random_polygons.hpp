#pragma once

#include <cstdint>
#include <vector>

#include "mg/geom.hpp"

namespace mg {

enum class RandomShape { Star, Funnel, Comb, Staircase };

/// Star-shaped polygon: integer points sorted by angle about the origin.
SimplePolygon random_star_polygon(std::size_t n, std::uint64_t seed);

/// Funnel with chord (0,0)-(W,0) as edge 0 and strictly reflex chains.
/// `n` counts all vertices (>= 3).
SimplePolygon random_funnel(std::size_t n, std::uint64_t seed);

/// Comb with `teeth` upward teeth of random integer heights (4·teeth vertices).
SimplePolygon random_comb(std::size_t teeth, std::uint64_t seed);

/// Monotone orthogonal staircase with `steps` steps (2·steps + 2 vertices).
SimplePolygon random_staircase(std::size_t steps, std::uint64_t seed);

/// Dispatch by shape; `n` is the vertex count for Star/Funnel and the
/// tooth/step count for Comb/Staircase.
SimplePolygon random_polygon(RandomShape shape, std::size_t n, std::uint64_t seed);

/// Points strictly inside p: random barycentric points of random ear triangles.
std::vector<Point> random_interior_points(const SimplePolygon& p, std::size_t count,
                                          std::uint64_t seed);

}  // namespace mg
