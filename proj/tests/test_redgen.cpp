#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mg/error.hpp"
#include "mg/redgen.hpp"
#include "mg/reflect.hpp"

using namespace mg;

using Idx = std::vector<std::size_t>;

TEST_CASE("subset sum brute force") {
  CHECK(subset_sum_bruteforce({{1}, 0}) == Idx{});
  CHECK(subset_sum_bruteforce({{1, 2, 3}, 5}) == Idx{1, 2});
  CHECK(subset_sum_bruteforce({{3, 34, 4, 12, 5, 2}, 9}) == Idx{2, 4});
  CHECK_FALSE(subset_sum_bruteforce({{2, 4}, 3}).has_value());
  CHECK_THROWS_AS(subset_sum_bruteforce({std::vector<long>(21, 1), 3}), Error);
}

TEST_CASE("specular generation") {
  const auto one = gen_specular({{1}, 1});
  const auto rep = verify_instance(one);
  CHECK(rep.ok());
  CHECK(rep.added_per_value == std::vector<Rational>{1});
  CHECK(polygon_area(one.spikes[0]) == 1);

  const auto ri = gen_specular({{1, 2, 3}, 3});
  CHECK(verify_instance(ri).ok());
  // Every subset adds exactly its sum.
  for (unsigned mask = 0; mask < 8; ++mask) {
    Idx chosen;
    long sum = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1U << i)) {
        chosen.push_back(i);
        sum += ri.source.values[i];
      }
    CHECK(added_area_for(ri, chosen) == sum);
  }
  CHECK(added_area_for(ri, {2}) == 3);
  CHECK(added_area_for(ri, {0, 1}) == 3);
  CHECK(solve_by_enumeration(ri) == Idx{2});
}

TEST_CASE("coordinate size grows polynomially") {
  std::size_t prev = 0;
  for (long m = 1; m <= 6; ++m) {
    std::vector<long> v(static_cast<std::size_t>(m), 12);
    const auto ri = gen_specular({v, 12});
    std::size_t bits = 0;
    for (const Point& p : ri.polygon.vertices())
      bits = std::max({bits, bit_length(p.x), bit_length(p.y)});
    CHECK(bits <= 64);
    CHECK(bits >= prev);
    prev = bits;
  }
}

TEST_CASE("diffuse generation") {
  const auto ri = gen_diffuse({{1, 2}, 3});
  const auto rep = verify_instance(ri);
  CHECK(rep.ok());
  CHECK(rep.base_leak > 0);
  CHECK(rep.base_leak < ratio(1, 4));
  for (std::size_t i = 0; i < 2; ++i) CHECK(polygon_area(ri.spikes[i]) == ri.source.values[i]);

  const auto two = gen_diffuse({{2, 3}, 5});
  CHECK(polygon_area(two.spikes[0]) == 2);
  CHECK(polygon_area(two.spikes[1]) == 3);
  CHECK(solve_by_enumeration(two) == Idx{0, 1});

  // The main edge altitude tS - rS is at least 1.
  for (std::size_t i = 0; i < two.spikes.size(); ++i) {
    const Segment e = two.polygon.edge(two.candidates.main[i]);
    CHECK(e.b.y - e.a.y >= 1);
  }
}

TEST_CASE("diffuse with two reflections") {
  const auto ri = gen_diffuse({{3, 1, 2}, 4}, true);
  CHECK(ri.kind == ReductionKind::DiffuseMulti);
  const auto rep = verify_instance(ri);
  CHECK(rep.ok());
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(ri.candidates.second[i].has_value());
    CHECK(visible_edge_parts(ri.polygon, ri.q, *ri.candidates.second[i]).empty());
  }
}

TEST_CASE("enumeration examples") {
  CHECK(solve_by_enumeration(gen_specular({{1, 2, 3}, 6})) == Idx{0, 1, 2});
  CHECK_FALSE(solve_by_enumeration(gen_specular({{2, 4}, 3})).has_value());
  const auto ri = gen_specular({{3, 5, 7}, 12});
  CHECK(solve_by_enumeration(ri) == Idx{1, 2});
  CHECK(added_area_for(ri, {1, 2}) == 12);
  CHECK(solve_by_enumeration(gen_diffuse({{3, 5, 7}, 12})) == Idx{1, 2});
}

TEST_CASE("tampered mirror breaks exactness") {
  auto ri = gen_specular({{1, 2}, 2});
  const std::size_t e = ri.candidates.main[0];
  std::vector<Point> v = ri.polygon.vertices();
  v[e].x += ratio(1, 4);
  v[(e + 1) % v.size()].x += ratio(1, 4);
  ri.polygon = SimplePolygon(v, SimplePolygon::Unchecked{});
  const auto rep = verify_instance(ri, false);
  CHECK_FALSE(rep.ok());
  CHECK(rep.failure.rfind("(b)", 0) == 0);
  try {
    verify_instance(ri, true);
    FAIL("expected VerificationFailed");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::VerificationFailed);
  }
  std::vector<Point> w = ri.polygon.vertices();
  w[e].x += 1;
  w[(e + 1) % w.size()].x += 1;
  ri.polygon = SimplePolygon(w, SimplePolygon::Unchecked{});
  CHECK(verify_instance(ri, false).failure.rfind("(a)", 0) == 0);
}

TEST_CASE("invalid sources") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Ok;
  };
  CHECK(code([] { gen_specular({{0}, 1}); }) == ErrorCode::InvalidInstance);
  CHECK(code([] { gen_diffuse({{}, 1}); }) == ErrorCode::InvalidInstance);
  CHECK(code([] { gen_diffuse({{2, -1}, 1}); }) == ErrorCode::InvalidInstance);
}

TEST_CASE("random equivalence, small sample") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 12; ++it) {
    const std::size_t m = 1 + rng() % 4;
    SubsetSumInstance ss;
    for (std::size_t i = 0; i < m; ++i) ss.values.push_back(1 + static_cast<long>(rng() % 9));
    ss.target = static_cast<long>(rng() % 20);
    const auto truth = subset_sum_bruteforce(ss);
    CHECK(solve_by_enumeration(gen_specular(ss)) == truth);
    CHECK(solve_by_enumeration(gen_diffuse(ss)) == truth);
  }
}
