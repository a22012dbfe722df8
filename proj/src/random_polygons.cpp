#include "mg/random_polygons.hpp"

#include <algorithm>
#include <random>

namespace mg {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Upper half (y > 0, or y = 0 and x > 0) sorts before the lower half.
bool angle_less(const Point& a, const Point& b) {
  const bool ua = sgn(a.y) > 0 || (sgn(a.y) == 0 && sgn(a.x) > 0);
  const bool ub = sgn(b.y) > 0 || (sgn(b.y) == 0 && sgn(b.x) > 0);
  if (ua != ub) return ua;
  return sgn(cross(Point{0, 0}, a, b)) > 0;
}

constexpr int kMaxAttempts = 10000;

}  // namespace

SimplePolygon random_star_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "star polygon needs at least 3 vertices");
  Rng rng(seed);
  const long span = 4 * static_cast<long>(n) + 8;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> pts;
    while (pts.size() < n) {
      Point p = make_point(uniform(rng, -span, span), uniform(rng, -span, span));
      if (sgn(p.x) == 0 && sgn(p.y) == 0) continue;
      bool clash = false;
      for (const Point& o : pts)
        clash |= sgn(cross(Point{0, 0}, o, p)) == 0 && sgn(o.x * p.x + o.y * p.y) > 0;
      if (!clash) pts.push_back(std::move(p));
    }
    std::sort(pts.begin(), pts.end(), angle_less);
    auto ring = normalize_ring(pts);
    if (ring.size() != n || sgn(signed_area(ring)) <= 0 || !ring_is_simple(ring)) continue;
    return SimplePolygon(std::move(ring));
  }
  throw Error(ErrorCode::Internal, "star polygon generation did not converge");
}

SimplePolygon random_funnel(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "funnel needs at least 3 vertices");
  Rng rng(seed);
  const std::size_t inner = n - 3;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const long w = 2 * uniform(rng, 6, 12);
    const Point u = make_point(0, 0), v = make_point(w, 0);
    const Point apex = make_point(uniform(rng, 2, w - 2), uniform(rng, 8, 16));
    const std::size_t right = inner == 0 ? 0 : static_cast<std::size_t>(uniform(rng, 0, inner));
    const std::size_t left = inner - right;

    // Chain from a to b bowed towards the interior (left of a -> b).
    auto chain = [&](const Point& a, const Point& b, std::size_t k) {
      std::vector<Point> out;
      if (k == 0) return out;
      std::vector<long> ts;
      const long den = 4 * static_cast<long>(k) + 4;
      while (ts.size() < k) {
        const long t = uniform(rng, 1, den - 1);
        if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
      }
      std::sort(ts.begin(), ts.end());
      const Rational bow = ratio(uniform(rng, 1, 4), 4);
      const Point normal{a.y - b.y, b.x - a.x};
      for (long ti : ts) {
        const Rational t = ratio(ti, den);
        const Rational k2 = bow * t * (1 - t);
        out.push_back({a.x + t * (b.x - a.x) + k2 * normal.x,
                       a.y + t * (b.y - a.y) + k2 * normal.y});
      }
      return out;
    };

    std::vector<Point> ring{u, v};
    for (auto& p : chain(v, apex, right)) ring.push_back(std::move(p));
    ring.push_back(apex);
    for (auto& p : chain(apex, u, left)) ring.push_back(std::move(p));
    if (normalize_ring(ring).size() != n || sgn(signed_area(ring)) <= 0 || !ring_is_simple(ring))
      continue;
    SimplePolygon poly(ring);
    std::size_t convex = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) convex += poly.is_reflex(i) ? 0 : 1;
    if (convex != 3 || poly[0] != u) continue;
    return poly;
  }
  throw Error(ErrorCode::Internal, "funnel generation did not converge");
}

SimplePolygon random_comb(std::size_t teeth, std::uint64_t seed) {
  if (teeth < 1) throw Error(ErrorCode::InvalidArgument, "comb needs at least one tooth");
  Rng rng(seed);
  const long t = static_cast<long>(teeth);
  const long width = 2 * t - 1;
  std::vector<Point> ring{make_point(0, 0), make_point(width, 0)};
  // Teeth occupy [2j, 2j+1]; the spine is y in [0, 1].
  for (long j = t - 1; j >= 0; --j) {
    const long h = uniform(rng, 2, 5);
    ring.push_back(make_point(2 * j + 1, j == t - 1 ? 0 : 1));
    ring.push_back(make_point(2 * j + 1, h));
    ring.push_back(make_point(2 * j, h));
    if (j > 0) ring.push_back(make_point(2 * j, 1));
  }
  return SimplePolygon(std::move(ring));
}

SimplePolygon random_staircase(std::size_t steps, std::uint64_t seed) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "staircase needs at least one step");
  Rng rng(seed);
  std::vector<long> xs{0}, ys{0};
  for (std::size_t i = 0; i < steps; ++i) {
    xs.push_back(xs.back() + uniform(rng, 1, 3));
    ys.push_back(ys.back() + uniform(rng, 1, 3));
  }
  const long X = xs.back(), Y = ys.back();
  // Bottom-left corner, then descending steps from the top-left.
  std::vector<Point> ring{make_point(0, 0), make_point(X, 0)};
  for (std::size_t i = steps; i >= 1; --i) {
    ring.push_back(make_point(xs[i], Y - ys[i - 1]));
    ring.push_back(make_point(xs[i - 1], Y - ys[i - 1]));
  }
  return SimplePolygon(std::move(ring));
}

std::vector<Point> random_interior_points(const SimplePolygon& p, std::size_t count,
                                          std::uint64_t seed) {
  Rng rng(seed);
  const auto tris = triangulate(p.vertices());
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto& t = tris[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(tris.size()) - 1))];
    const long den = 64;
    const long a = uniform(rng, 1, den - 2);
    const long b = uniform(rng, 1, den - 1 - a);
    const Rational wa = ratio(a, den), wb = ratio(b, den), wc = 1 - wa - wb;
    out.push_back({wa * p[t[0]].x + wb * p[t[1]].x + wc * p[t[2]].x,
                   wa * p[t[0]].y + wb * p[t[1]].y + wc * p[t[2]].y});
  }
  return out;
}

SimplePolygon random_polygon(RandomShape shape, std::size_t n, std::uint64_t seed) {
  switch (shape) {
    case RandomShape::Star: return random_star_polygon(n, seed);
    case RandomShape::Funnel: return random_funnel(n, seed);
    case RandomShape::Comb: return random_comb(n, seed);
    case RandomShape::Staircase: return random_staircase(n, seed);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown shape");
}

}  // namespace mg
