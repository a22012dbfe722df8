#include "mg/geom.hpp"

#include <algorithm>
#include <cctype>

namespace mg {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::QueryOutsidePolygon: return "QueryOutsidePolygon";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::BitBlowup: return "BitBlowup";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::SegmentOutsidePolygon: return "SegmentOutsidePolygon";
    case ErrorCode::SourceOnMirrorLine: return "SourceOnMirrorLine";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GraphDisconnected: return "GraphDisconnected";
    case ErrorCode::CoverageCertificationFailed: return "CoverageCertificationFailed";
    case ErrorCode::NotAFunnel: return "NotAFunnel";
    case ErrorCode::NotWeaklyVisible: return "NotWeaklyVisible";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_wire(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::size_t bit_length(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

double to_double(const Rational& r) { return r.get_d(); }

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Point make_point(long a, long b) { return {Rational(a), Rational(b)}; }

Point lerp(const Point& a, const Point& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Point midpoint(const Point& a, const Point& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int sign(const Rational& r) { return sgn(r); }

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(sgn(cross(p, q, r)));
}

bool on_segment(const Point& p, const Segment& s) {
  if (sgn(cross(s.a, s.b, p)) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  SegmentIntersection out;
  const Rational d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
  const Rational d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
  const Rational den = d1x * d2y - d1y * d2x;
  const Rational ex = s2.a.x - s1.a.x, ey = s2.a.y - s1.a.y;
  if (sgn(den) != 0) {
    const Rational t = (ex * d2y - ey * d2x) / den;
    const Rational u = (ex * d1y - ey * d1x) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return out;
    out.kind = SegmentIntersection::Kind::Point;
    out.point = {s1.a.x + t * d1x, s1.a.y + t * d1y};
    return out;
  }
  if (sgn(ex * d1y - ey * d1x) != 0) return out;  // parallel, distinct lines
  const Point lo1 = std::min(s1.a, s1.b), hi1 = std::max(s1.a, s1.b);
  const Point lo2 = std::min(s2.a, s2.b), hi2 = std::max(s2.a, s2.b);
  const Point lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
  if (hi < lo) return out;
  if (lo == hi) {
    out.kind = SegmentIntersection::Kind::Point;
    out.point = lo;
    return out;
  }
  out.kind = SegmentIntersection::Kind::Overlap;
  out.overlap = {lo, hi};
  return out;
}

bool line_intersection(const Point& a, const Point& b, const Point& c,
                       const Point& d, Point& out) {
  const Rational d1x = b.x - a.x, d1y = b.y - a.y;
  const Rational d2x = d.x - c.x, d2y = d.y - c.y;
  const Rational den = d1x * d2y - d1y * d2x;
  if (sgn(den) == 0) return false;
  const Rational t = ((c.x - a.x) * d2y - (c.y - a.y) * d2x) / den;
  out = {a.x + t * d1x, a.y + t * d1y};
  return true;
}

Rational param_on_segment(const Point& a, const Point& b, const Point& p) {
  if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
  return (p.y - a.y) / (b.y - a.y);
}

Point reflect_across_line(const Point& p, const Point& a, const Point& b) {
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  const Rational t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
  const Point foot{a.x + t * dx, a.y + t * dy};
  return {2 * foot.x - p.x, 2 * foot.y - p.y};
}

Rational signed_area(std::span<const Point> ring) {
  Rational twice = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

std::vector<Point> normalize_ring(std::vector<Point> ring) {
  std::vector<Point> st;
  st.reserve(ring.size());
  for (Point& p : ring) {
    if (!st.empty() && st.back() == p) continue;
    while (st.size() >= 2 && sgn(cross(st[st.size() - 2], st.back(), p)) == 0) st.pop_back();
    if (!st.empty() && st.back() == p) continue;
    st.push_back(std::move(p));
  }
  // Fix up the wrap-around seam.
  std::size_t front = 0;
  bool changed = true;
  while (changed && st.size() - front >= 3) {
    changed = false;
    if (st.back() == st[front]) {
      st.pop_back();
      changed = true;
      continue;
    }
    if (sgn(cross(st[st.size() - 2], st.back(), st[front])) == 0) {
      st.pop_back();
      changed = true;
      continue;
    }
    if (sgn(cross(st.back(), st[front], st[front + 1])) == 0) {
      ++front;
      changed = true;
    }
  }
  return {std::make_move_iterator(st.begin() + static_cast<std::ptrdiff_t>(front)),
          std::make_move_iterator(st.end())};
}

bool ring_is_simple(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei{ring[i], ring[(i + 1) % n]};
    if (ei.a == ei.b) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment ej{ring[j], ring[(j + 1) % n]};
      const auto x = segment_intersection(ei, ej);
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (!adjacent) {
        if (x.kind != SegmentIntersection::Kind::Empty) return false;
        continue;
      }
      if (x.kind == SegmentIntersection::Kind::Overlap) return false;
      if (n == 3) continue;
      // Adjacent edges may meet only at their shared vertex.
      const Point& shared = (j == i + 1) ? ei.b : ei.a;
      if (x.kind == SegmentIntersection::Kind::Point && x.point != shared) return false;
    }
  }
  return true;
}

bool ring_is_convex(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(cross(ring[i], ring[(i + 1) % n], ring[(i + 2) % n])) < 0) return false;
  return signed_area(ring) > 0;
}

SimplePolygon::SimplePolygon(std::vector<Point> vertices) {
  auto ring = normalize_ring(std::move(vertices));
  if (ring.size() < 3) throw Error(ErrorCode::NotSimple, "polygon has fewer than 3 distinct corners");
  const Rational a = signed_area(ring);
  if (sgn(a) == 0) throw Error(ErrorCode::NotSimple, "polygon has zero area");
  if (a < 0) std::reverse(ring.begin(), ring.end());
  if (!ring_is_simple(ring)) throw Error(ErrorCode::NotSimple, "polygon boundary self-intersects");
  v_ = std::move(ring);
}

bool SimplePolygon::is_reflex(std::size_t i) const {
  const std::size_t n = v_.size();
  return sgn(cross(v_[(i + n - 1) % n], v_[i % n], v_[(i + 1) % n])) < 0;
}

Rational polygon_area(const SimplePolygon& p) { return signed_area(p.vertices()); }

Location point_in_ring(const Point& q, std::span<const Point> ring) {
  const std::size_t n = ring.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if (on_segment(q, {a, b})) return Location::Boundary;
    if (a.y <= q.y) {
      if (b.y > q.y && sgn(cross(a, b, q)) > 0) ++winding;
    } else if (b.y <= q.y && sgn(cross(a, b, q)) < 0) {
      --winding;
    }
  }
  return winding != 0 ? Location::Interior : Location::Exterior;
}

Location point_in_polygon(const Point& q, const SimplePolygon& p) {
  return point_in_ring(q, p.vertices());
}

namespace {

// Parameters in [0, 1] along a->b where the segment meets the boundary of p.
std::vector<Rational> boundary_touches(const SimplePolygon& p, const Point& a, const Point& b) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  const Segment s{a, b};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto x = segment_intersection(s, p.edge(i));
    if (x.kind == SegmentIntersection::Kind::Point) {
      ts.push_back(param_on_segment(a, b, x.point));
    } else if (x.kind == SegmentIntersection::Kind::Overlap) {
      ts.push_back(param_on_segment(a, b, x.overlap.a));
      ts.push_back(param_on_segment(a, b, x.overlap.b));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

bool segment_in_closed_polygon(const SimplePolygon& p, const Point& a, const Point& b) {
  if (point_in_polygon(a, p) == Location::Exterior) return false;
  if (a == b) return true;
  if (point_in_polygon(b, p) == Location::Exterior) return false;
  const auto ts = boundary_touches(p, a, b);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Point m = lerp(a, b, (ts[i] + ts[i + 1]) / 2);
    if (point_in_polygon(m, p) == Location::Exterior) return false;
  }
  return true;
}

Point ray_exit(const SimplePolygon& p, const Point& from, const Point& through) {
  const Box box = bounding_box(p.vertices());
  const Rational dx = through.x - from.x, dy = through.y - from.y;
  const Rational l1 = abs(dx) + abs(dy);
  if (sgn(l1) == 0) return from;
  const Rational span = (box.xmax - box.xmin) + (box.ymax - box.ymin);
  const Rational k = 2 * (span + abs(from.x - box.xmin) + abs(from.y - box.ymin)) / l1 + 1;
  const Point far{from.x + k * dx, from.y + k * dy};
  const auto ts = boundary_touches(p, from, far);
  Rational reach = 0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Point m = lerp(from, far, (ts[i] + ts[i + 1]) / 2);
    if (point_in_polygon(m, p) == Location::Exterior) break;
    reach = ts[i + 1];
  }
  return lerp(from, far, reach);
}

std::vector<std::array<std::size_t, 3>> triangulate(std::span<const Point> ring) {
  std::vector<std::array<std::size_t, 3>> tris;
  std::vector<std::size_t> idx(ring.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  while (idx.size() > 3) {
    const std::size_t n = idx.size();
    bool clipped = false;
    for (std::size_t k = 0; k < n && !clipped; ++k) {
      const std::size_t ia = idx[(k + n - 1) % n], ib = idx[k], ic = idx[(k + 1) % n];
      const Point &a = ring[ia], &b = ring[ib], &c = ring[ic];
      if (sgn(cross(a, b, c)) <= 0) continue;
      bool ear = true;
      for (std::size_t j = 0; j < n && ear; ++j) {
        const std::size_t ip = idx[j];
        if (ip == ia || ip == ib || ip == ic) continue;
        const Point& p = ring[ip];
        if (p == a || p == b || p == c) continue;
        if (sgn(cross(a, b, p)) >= 0 && sgn(cross(b, c, p)) >= 0 && sgn(cross(c, a, p)) >= 0)
          ear = false;
      }
      if (!ear) continue;
      tris.push_back({ia, ib, ic});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (clipped) continue;
    // Only straight (zero-area) corners remain clip-blocked; drop one.
    bool dropped = false;
    for (std::size_t k = 0; k < n; ++k) {
      const Point& a = ring[idx[(k + n - 1) % n]];
      const Point& b = ring[idx[k]];
      const Point& c = ring[idx[(k + 1) % n]];
      if (sgn(cross(a, b, c)) == 0) {
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
        dropped = true;
        break;
      }
    }
    if (!dropped) throw Error(ErrorCode::Internal, "triangulation found no ear");
  }
  if (idx.size() == 3 && sgn(cross(ring[idx[0]], ring[idx[1]], ring[idx[2]])) > 0)
    tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

Point vertex_centroid(std::span<const Point> ring) {
  Point c{0, 0};
  for (const Point& p : ring) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<long>(ring.size());
  c.y /= static_cast<long>(ring.size());
  return c;
}

Box bounding_box(std::span<const Point> pts) {
  Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& p : pts) {
    if (p.x < b.xmin) b.xmin = p.x;
    if (p.x > b.xmax) b.xmax = p.x;
    if (p.y < b.ymin) b.ymin = p.y;
    if (p.y > b.ymax) b.ymax = p.y;
  }
  return b;
}

}  // namespace mg
