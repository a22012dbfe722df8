#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mg/error.hpp"
#include "mg/geom.hpp"
#include "mg/redgen.hpp"

using namespace mg;
using th::P;
using th::Q;

TEST_CASE("rational wire format") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK_THROWS_AS(parse_rational("  7/1"), Error);
  CHECK(to_wire(ratio(-2, 4)) == "-1/2");
  CHECK(to_wire(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    const long den = d(rng);
    if (den == 0) continue;
    const Rational r = ratio(d(rng), den);
    CHECK(parse_rational(to_wire(r)) == r);
  }
}

TEST_CASE("orientation") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 1)) == Orientation::CW);
}

TEST_CASE("segment intersection") {
  auto x = segment_intersection({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
  REQUIRE(x.kind == SegmentIntersection::Kind::Point);
  CHECK(x.point == P(1, 1));
  CHECK(segment_intersection({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}).kind ==
        SegmentIntersection::Kind::Empty);
  x = segment_intersection({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)});
  REQUIRE(x.kind == SegmentIntersection::Kind::Overlap);
  CHECK(x.overlap.a == P(1, 0));
  CHECK(x.overlap.b == P(2, 0));
  x = segment_intersection({P(0, 0), P(1, 0)}, {P(1, 0), P(1, 5)});
  REQUIRE(x.kind == SegmentIntersection::Kind::Point);
  CHECK(x.point == P(1, 0));
}

TEST_CASE("polygon area") {
  CHECK(polygon_area(th::unit_square()) == 1);
  CHECK(polygon_area(th::poly({{0, 0}, {4, 0}, {0, 3}})) == 6);
  // Shoelace over the bottom spikes of a generated specular instance.
  const auto ri = gen_specular({{3, 1, 4}, 4});
  for (std::size_t i = 0; i < ri.spikes.size(); ++i)
    CHECK(polygon_area(ri.spikes[i]) == ri.source.values[i]);
}

TEST_CASE("point in polygon") {
  const auto sq = th::unit_square();
  CHECK(point_in_polygon(Q(1, 2, 1, 2), sq) == Location::Interior);
  CHECK(point_in_polygon(Q(0, 1, 1, 2), sq) == Location::Boundary);
  CHECK(point_in_polygon(P(2, 2), sq) == Location::Exterior);
  CHECK(point_in_polygon(P(1, 1), sq) == Location::Boundary);
  const auto l = th::l_shape();
  CHECK(point_in_polygon(Q(3, 2, 3, 2), l) == Location::Exterior);
  CHECK(point_in_polygon(Q(1, 2, 3, 2), l) == Location::Interior);
}

TEST_CASE("simple polygon validation and normalization") {
  CHECK_THROWS_AS(th::poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), Error);
  const auto p = th::poly({{0, 0}, {0, 1}, {1, 1}, {1, 0}});  // clockwise input
  CHECK(signed_area(p.vertices()) == 1);
  const auto q = th::poly({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {2, 2}, {0, 2}});
  CHECK(q.size() == 4);
  try {
    th::poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimple);
  }
}

TEST_CASE("reflection across a line") {
  CHECK(reflect_across_line(P(0, 0), P(0, 2), P(1, 2)) == P(0, 4));
  CHECK(reflect_across_line(P(1, 0), P(0, 0), P(1, 1)) == P(0, 1));
}

TEST_CASE("triangulation covers the polygon") {
  const auto l = th::l_shape();
  Rational sum = 0;
  for (const auto& t : triangulate(l.vertices()))
    sum += signed_area(std::vector<Point>{l[t[0]], l[t[1]], l[t[2]]});
  CHECK(sum == 3);
}

TEST_CASE("segment containment and ray exit") {
  const auto l = th::l_shape();
  CHECK(segment_in_closed_polygon(l, P(0, 0), P(2, 1)));
  CHECK_FALSE(segment_in_closed_polygon(l, P(2, 1), P(1, 2)));
  CHECK(segment_in_closed_polygon(l, P(0, 2), P(1, 1)));
  CHECK(ray_exit(l, P(0, 0), P(1, 1)) == P(1, 1));
  CHECK(ray_exit(l, Q(1, 2, 1, 2), Q(3, 2, 1, 2)) == Q(2, 1, 1, 2));
  CHECK(ray_exit(l, Q(1, 2, 1, 4), Q(1, 2, 1, 2)) == Q(1, 2, 2, 1));
}
