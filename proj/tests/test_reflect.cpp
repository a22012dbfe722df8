#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "mg/error.hpp"
#include "mg/random_polygons.hpp"
#include "mg/redgen.hpp"
#include "mg/reflect.hpp"
#include "mg/visibility.hpp"

using namespace mg;
using th::P;
using th::Q;

TEST_CASE("convex polygons gain nothing") {
  const auto sq = th::unit_square();
  const Point q = Q(1, 2, 1, 4);
  CHECK(diffuse_extend(sq, q, {all_edges(sq), ReflectionKind::Diffuse, 3}).added.empty());
  CHECK(specular_extend_single(sq, q, 2).added.area() == 0);
  CHECK(added_area(extend(sq, q, {{0, 1, 2, 3}, ReflectionKind::Specular, 1})) == 0);
  const auto parts = visible_edge_parts(sq, q, 2);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].a == P(1, 1));
  CHECK(parts[0].b == P(0, 1));
}

TEST_CASE("edges facing away are dark") {
  const auto l = th::l_shape();
  // Edge 3 runs (1,1)-(1,2).
  CHECK(visible_edge_parts(l, Q(1, 4, 1, 4), 3).size() == 1);
  CHECK(visible_edge_parts(l, Q(7, 4, 1, 2), 3).empty());
}

TEST_CASE("L-shape reflections, hand computed") {
  const auto l = th::l_shape();
  const Point q = Q(7, 4, 1, 2);
  // Direct view covers the bottom bar and a wedge of the top arm.
  CHECK(visibility_polygon(l, q).region.area() == ratio(7, 3));
  CHECK(specular_extend_single(l, q, 5).added.area() == ratio(7, 12));
  CHECK(specular_extend_single(l, q, 0).added.area() == ratio(5, 12));
  CHECK(diffuse_extend(l, q, {{0}, ReflectionKind::Diffuse, 1}).added.area() == ratio(2, 3));
  CHECK(diffuse_extend(l, q, {all_edges(l), ReflectionKind::Diffuse, 1}).visible().area() == 3);
}

TEST_CASE("funnel chord lights the whole funnel") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto f = random_funnel(8, seed);
    for (const Point& q : random_interior_points(f, 2, seed)) {
      const auto ev = diffuse_extend(f, q, {{0}, ReflectionKind::Diffuse, 1});
      CHECK(ev.visible().area() == polygon_area(f));
      CHECK(ev.added.area() == polygon_area(f) - ev.direct.region.area());
    }
  }
}

TEST_CASE("specular mirrors of a reduction instance") {
  const auto ri = gen_specular({{1, 2, 3}, 3});
  Rational sum = 0;
  std::vector<std::size_t> mirrors;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t e = ri.candidates.main[i];
    const auto parts = visible_edge_parts(ri.polygon, ri.q, e);
    REQUIRE(parts.size() == 1);
    const Segment edge = ri.polygon.edge(e);
    CHECK(((parts[0].a == edge.a && parts[0].b == edge.b) ||
           (parts[0].a == edge.b && parts[0].b == edge.a)));
    const auto ev = specular_extend_single(ri.polygon, ri.q, e);
    CHECK(ev.added.area() == ri.source.values[i]);
    CHECK(region_intersection(ev.added, Region(ri.spikes[i])).area() == ri.source.values[i]);
    sum += ri.source.values[i];
    mirrors.push_back(e);
    CHECK(added_area(extend(ri.polygon, ri.q, {mirrors, ReflectionKind::Specular, 1})) == sum);
  }
}

TEST_CASE("diffuse main edge adds its triangle") {
  const auto ri = gen_diffuse({{2, 3}, 5});
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(diffuse_extend(ri.polygon, ri.q, {{ri.candidates.main[i]}, ReflectionKind::Diffuse, 1})
              .added.area() == ri.source.values[i]);
}

TEST_CASE("overlapping pockets are counted once") {
  // The bottom edge and the left wall both light the hidden top arm.
  const auto l = th::l_shape();
  const Point q = Q(7, 4, 1, 2);
  const auto run = [&](std::vector<std::size_t> e) {
    return diffuse_extend(l, q, {std::move(e), ReflectionKind::Diffuse, 1}).added;
  };
  const Region a = run({0}), b = run({5}), both = run({0, 5});
  const Rational overlap = region_intersection(a, b).area();
  CHECK(overlap > 0);
  CHECK(both.area() < a.area() + b.area());
  CHECK(both.area() == a.area() + b.area() - overlap);
}

TEST_CASE("fixed sequences and multiple bounces") {
  const auto l = th::l_shape();
  const Point q = Q(7, 4, 1, 2);
  const auto one = diffuse_extend_sequence(l, q, {0});
  CHECK(one.added.area() == ratio(2, 3));
  const auto zero = diffuse_extend(l, q, {{0}, ReflectionKind::Diffuse, 0});
  CHECK(zero.added.empty());
  const auto more = diffuse_extend(l, q, {all_edges(l), ReflectionKind::Diffuse, 2});
  CHECK(more.visible().area() == 3);
  for (const auto& part : more.illumination) CHECK(part.depth <= 1);
}

TEST_CASE("error contract") {
  const auto l = th::l_shape();
  const Point q = Q(7, 4, 1, 2);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Ok;
  };
  CHECK(code([&] { extend(l, q, {{0}, ReflectionKind::Specular, 2}); }) == ErrorCode::SpecMismatch);
  CHECK(code([&] { diffuse_extend(l, q, {{0}, ReflectionKind::Specular, 1}); }) ==
        ErrorCode::SpecMismatch);
  CHECK(code([&] { specular_extend_single(l, Q(1, 2, 0, 1), 0); }) ==
        ErrorCode::SourceOnMirrorLine);
  CHECK(code([&] { diffuse_extend(l, q, {{17}, ReflectionKind::Diffuse, 1}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("bit cap") {
  setenv("MG_BIT_CAP", "4", 1);
  const auto l = th::l_shape();
  int code = 0;
  try {
    diffuse_extend(l, Q(7, 4, 1, 2), {all_edges(l), ReflectionKind::Diffuse, 2});
  } catch (const Error& e) {
    code = static_cast<int>(e.code());
  }
  unsetenv("MG_BIT_CAP");
  CHECK(code == static_cast<int>(ErrorCode::BitBlowup));
}
