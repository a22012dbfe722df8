#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "mg/error.hpp"
#include "mg/random_polygons.hpp"
#include "mg/reflect.hpp"
#include "mg/special.hpp"
#include "mg/visibility.hpp"

using namespace mg;
using th::P;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

Region one_bounce(const SimplePolygon& p, const Point& q, std::vector<std::size_t> edges) {
  return diffuse_extend(p, q, {std::move(edges), ReflectionKind::Diffuse, 1}).added;
}

}  // namespace

TEST_CASE("funnel detection") {
  const auto tri = th::poly({{0, 0}, {4, 0}, {1, 3}});
  const Funnel t = detect_funnel(tri);
  CHECK(t.chord == 0);
  CHECK(t.apex == 2);

  const Funnel f = detect_funnel(th::pentagon_funnel());
  CHECK(f.chord == 0);
  CHECK(f.polygon[f.apex] == P(3, 5));
  CHECK(f.left_chain == std::vector<std::size_t>{0, 4, 3});
  CHECK(f.right_chain == std::vector<std::size_t>{1, 2, 3});

  CHECK(code_of([] { detect_funnel(th::l_shape()); }) == ErrorCode::NotAFunnel);
  CHECK(code_of([] { detect_funnel(th::unit_square()); }) == ErrorCode::NotAFunnel);
}

TEST_CASE("tangents of a triangle are its vertices") {
  const auto tri = th::poly({{0, 0}, {4, 0}, {1, 3}});
  const Funnel f = detect_funnel(tri);
  const auto t = funnel_tangents(f, P(1, 1));
  for (const Point& x : {t.p1, t.p2, t.p3, t.p4})
    CHECK(std::find(tri.vertices().begin(), tri.vertices().end(), x) != tri.vertices().end());
  const auto best = funnel_best_mirrors(f, P(1, 1));
  CHECK(best.full_coverage);
  CHECK(best.edges.empty());
}

TEST_CASE("tangents from the kernel on the chord") {
  const Funnel f = detect_funnel(th::pentagon_funnel());
  const Point kernel = P(3, 0);
  REQUIRE(visibility_polygon(f.polygon, kernel).region.area() == polygon_area(f.polygon));
  const auto t = funnel_tangents(f, kernel);
  CHECK(t.p1 == P(3, 5));
  CHECK(t.p2 == P(3, 5));
  CHECK((t.p4 == P(0, 0) || t.p4 == P(6, 0)));
  CHECK((t.p3 == P(0, 0) || t.p3 == P(6, 0)));
  CHECK(code_of([&] { funnel_tangents(f, P(9, 9)); }) == ErrorCode::QueryOutsidePolygon);
}

TEST_CASE("pentagon tangents by exhaustive check") {
  const Funnel f = detect_funnel(th::pentagon_funnel());
  const Point q = P(3, 1);
  const auto t = funnel_tangents(f, q);
  const auto& near = t.left_closer ? f.left_chain : f.right_chain;
  const auto& far = t.left_closer ? f.right_chain : f.left_chain;
  const auto pos = [&](const std::vector<std::size_t>& chain, const Point& x) {
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (f.polygon[chain[i]] == x) return i;
    return chain.size();
  };
  const std::size_t i1 = pos(near, t.p1), i3 = pos(far, t.p3), i4 = pos(near, t.p4);
  REQUIRE(i1 < near.size());
  REQUIRE(i3 < far.size());
  REQUIRE(i4 < near.size());
  for (std::size_t i = 0; i < near.size(); ++i) {
    const bool seen = points_visible(f.polygon, q, f.polygon[near[i]]);
    if (i > i1 || i < i4) CHECK_FALSE(seen);
  }
  for (std::size_t i = 0; i < i3; ++i) CHECK_FALSE(points_visible(f.polygon, q, f.polygon[far[i]]));
  CHECK(points_visible(f.polygon, q, t.p1));
  CHECK(points_visible(f.polygon, q, t.p2));
}

TEST_CASE("pentagon: candidate subsets match all subsets") {
  const Funnel f = detect_funnel(th::pentagon_funnel());
  const Point q = th::Q(5, 1, 1, 2);
  const auto best = funnel_best_mirrors(f, q);
  CHECK(best.candidates.size() <= 8);
  CHECK(best.subsets_evaluated <= (std::size_t{1} << best.candidates.size()));
  const SimplePolygon& p = f.polygon;
  const Rational hidden = polygon_area(p) - visibility_polygon(p, q).region.area();
  std::vector<std::size_t> others;
  for (std::size_t e = 0; e < p.size(); ++e)
    if (e != f.chord) others.push_back(e);
  Rational best_all = 0;
  std::size_t smallest_full = others.size() + 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << others.size()); ++mask) {
    std::vector<std::size_t> edges;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask & (std::size_t{1} << i)) edges.push_back(others[i]);
    const Rational a = one_bounce(p, q, edges).area();
    best_all = std::max(best_all, a);
    if (a == hidden) smallest_full = std::min(smallest_full, edges.size());
  }
  CHECK(best.added == best_all);
  CHECK(hidden > 0);
  if (best.full_coverage) CHECK(best.edges.size() == smallest_full);
}

TEST_CASE("chord alone suffices") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Funnel f = detect_funnel(random_funnel(8, seed));
    const Point q = random_interior_points(f.polygon, 1, seed).front();
    const auto best = funnel_best_mirrors(f, q, true);
    CHECK(best.full_coverage);
    CHECK(best.edges.size() <= 1);
    const VisibilityPolygon vp = visibility_polygon(f.polygon, q);
    CHECK(vp.region.area() + one_bounce(f.polygon, q, {f.chord}).area() ==
          polygon_area(f.polygon));
  }
}

TEST_CASE("tangent edges dominate every other edge") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Funnel f = detect_funnel(random_funnel(7 + seed % 3, seed));
    const Point q = random_interior_points(f.polygon, 1, seed + 100).front();
    const auto cand = tangent_candidate_edges(f, funnel_tangents(f, q));
    const Region dom = one_bounce(f.polygon, q, cand);
    for (std::size_t e = 0; e < f.polygon.size(); ++e) {
      if (e == f.chord) continue;
      CHECK(region_difference(one_bounce(f.polygon, q, {e}), dom).area() == 0);
    }
  }
}

TEST_CASE("weak visibility polygons from an edge") {
  const auto sq = th::unit_square();
  const auto conv = wvp_best_single_edge(sq, 0, th::Q(1, 2, 1, 2));
  CHECK(conv.certified);
  for (const auto& a : conv.added_per_edge) CHECK(a == 0);
  CHECK(wvp_three_reflection_cover(sq, 0).certified);

  const auto fun = random_funnel(8, 3);
  CHECK(weakly_visible_from_edge(fun, 0));
  const auto fr = wvp_best_single_edge(fun, 0, random_interior_points(fun, 1, 5).front());
  CHECK(fr.edge == 0);
  CHECK(fr.certified);
  const auto f3 = wvp_three_reflection_cover(fun, 0);
  CHECK(f3.certified);
  CHECK(f3.au_sees_v);
  CHECK(f3.sequence.size() == 3);

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto st = random_staircase(2, seed);
    REQUIRE(st.size() == 6);
    REQUIRE(weakly_visible_from_edge(st, 0));
    CHECK(wvp_best_single_edge(st, 0, random_interior_points(st, 1, seed).front()).certified);
    const auto r = wvp_three_reflection_cover(st, 0);
    CHECK(r.au_sees_v);
    CHECK(r.samples == 20);
    CHECK(r.certified);
  }
  CHECK(code_of([] { wvp_best_single_edge(th::l_shape(), 3, th::Q(1, 2, 1, 2)); }) ==
        ErrorCode::NotWeaklyVisible);
}
