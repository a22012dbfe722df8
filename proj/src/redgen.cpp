#include "mg/redgen.hpp"

#include <algorithm>
#include <numeric>

#include "mg/error.hpp"
#include "mg/reflect.hpp"
#include "mg/region.hpp"
#include "mg/visibility.hpp"

namespace mg {

namespace {

void check_source(const SubsetSumInstance& ss) {
  if (ss.values.empty()) throw Error(ErrorCode::InvalidInstance, "empty value list");
  for (std::size_t i = 0; i < ss.values.size(); ++i)
    if (ss.values[i] < 1)
      throw Error(ErrorCode::InvalidInstance,
                  "value " + std::to_string(i) + " is not a positive integer");
  if (ss.target < 0) throw Error(ErrorCode::InvalidInstance, "negative target");
}

std::size_t find_edge(const SimplePolygon& p, const Point& a, const Point& b) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == a && p[i + 1] == b) return i;
  throw Error(ErrorCode::Internal, "generated edge vanished during normalization");
}

Point pt(const Rational& x, const Rational& y) { return Point{x, y}; }

Region spikes_union(const ReductionInstance& ri) {
  Region all;
  for (const auto& s : ri.spikes) all = region_union(all, Region(s));
  return all;
}

Region main_added(const ReductionInstance& ri, std::size_t i) {
  const std::size_t e = ri.candidates.main[i];
  if (ri.kind == ReductionKind::SpecularSingle)
    return specular_extend_single(ri.polygon, ri.q, e).added;
  return diffuse_extend(ri.polygon, ri.q, {{e}, ReflectionKind::Diffuse, 1}).added;
}

template <class Visit>
bool for_each_subset(std::size_t m, Visit visit) {
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= m; ++size) {
    idx.resize(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      if (visit(idx)) return true;
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == m - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace

const char* reduction_kind_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::SpecularSingle: return "specular";
    case ReductionKind::DiffuseSingle: return "diffuse";
    case ReductionKind::DiffuseMulti: return "diffuse-multi";
  }
  return "specular";
}

ReductionKind parse_reduction_kind(const std::string& text) {
  if (text == "specular" || text == "SpecularSingle") return ReductionKind::SpecularSingle;
  if (text == "diffuse" || text == "DiffuseSingle") return ReductionKind::DiffuseSingle;
  if (text == "diffuse-multi" || text == "DiffuseMulti") return ReductionKind::DiffuseMulti;
  throw Error(ErrorCode::InvalidArgument, "unknown reduction kind '" + text + "'");
}

ReductionInstance gen_specular(const SubsetSumInstance& ss) {
  check_source(ss);
  const long m = static_cast<long>(ss.values.size());
  const long total = std::accumulate(ss.values.begin(), ss.values.end(), 0L);
  const Rational h1 = 2 * (total + m);
  const Rational htop = 4 * (total + 2 * m);
  const Rational d = ratio(1, 4);

  std::vector<long> prefix(static_cast<std::size_t>(m) + 1, 0);
  for (long i = 1; i <= m; ++i) prefix[i] = prefix[i - 1] + ss.values[i - 1];
  auto llt = [&](long i) { return pt(i + 2 * prefix[i - 1], 0); };
  auto blt = [&](long i) { return pt(i + 2 * prefix[i], -1); };
  auto rlt = [&](long i) { return pt(i + 2 * prefix[i], 0); };
  auto lm = [&](long i) {
    if (i == m + 1) return pt(Rational(rlt(m).x + 1) / 2, h1);
    return pt(llt(i).x / 2, h1);
  };
  auto rm = [&](long i) { return pt(rlt(i).x / 2, h1); };
  auto ut = [&](long i) { return pt(rm(i).x * htop / h1, htop); };
  const Rational xend = rlt(m).x + 1;

  std::vector<Point> ring{pt(-1, -1), pt(d, -1), pt(d, 0)};
  for (long i = 1; i <= m; ++i) {
    ring.push_back(llt(i));
    ring.push_back(blt(i));
    ring.push_back(rlt(i));
  }
  ring.push_back(pt(xend, 0));
  ring.push_back(pt(xend, h1));
  ring.push_back(lm(m + 1));
  for (long i = m; i >= 1; --i) {
    ring.push_back(ut(i));
    ring.push_back(rm(i));
    ring.push_back(lm(i));
  }
  ring.push_back(pt(lm(1).x, htop + 1));
  ring.push_back(pt(0, htop + 1));
  ring.push_back(pt(-1, htop));

  ReductionInstance ri;
  ri.polygon = SimplePolygon(std::move(ring));
  ri.q = pt(0, 0);
  ri.kind = ReductionKind::SpecularSingle;
  ri.k = ss.target;
  ri.source = ss;
  for (long i = 1; i <= m; ++i) {
    ri.candidates.main.push_back(find_edge(ri.polygon, rm(i), lm(i)));
    ri.candidates.second.push_back(std::nullopt);
    ri.spikes.push_back(SimplePolygon({llt(i), blt(i), rlt(i)}));
  }
  return ri;
}

ReductionInstance gen_diffuse(const SubsetSumInstance& ss, bool multi) {
  check_source(ss);
  const long m = static_cast<long>(ss.values.size());
  const long sigma = std::accumulate(ss.values.begin(), ss.values.end(), 0L);
  // The gadget degenerates for a single value, so it is sized for at least two.
  const long mu = std::max(m, 2L);
  const Rational m2 = mu * mu;
  const Rational y0 = m2 * (mu + 1) * sigma;

  struct Gadget {
    Point ls, rs, ts, bt, lt;
  };
  std::vector<Gadget> g;
  for (long i = 1; i <= m; ++i) {
    Gadget k;
    const Rational xr = m2 * sigma * i * (i + 1);
    k.ls = pt(xr - i, y0);
    k.rs = pt(xr, y0);
    k.ts = pt(xr, y0 * xr / k.ls.x);
    k.bt = lerp(k.ls, k.ts, (m2 - 1) / m2);
    k.lt = pt(k.ts.x - 2 * Rational(ss.values[i - 1]) / (k.ts.y - k.bt.y), k.ts.y);
    g.push_back(k);
  }
  const Rational x = g.back().rs.x;

  std::vector<Point> ring{pt(-x, -1), pt(2 * x, -1), pt(2 * x, y0)};
  for (long i = m; i >= 1; --i) {
    const Gadget& k = g[i - 1];
    for (const Point& v : {k.rs, k.ts, k.lt, k.bt, k.ls}) ring.push_back(v);
  }
  ring.push_back(pt(-x, y0));

  ReductionInstance ri;
  ri.polygon = SimplePolygon(std::move(ring));
  ri.q = pt(0, 0);
  ri.kind = multi ? ReductionKind::DiffuseMulti : ReductionKind::DiffuseSingle;
  ri.k = ss.target;
  ri.source = ss;
  ri.candidates.base = find_edge(ri.polygon, pt(-x, -1), pt(2 * x, -1));
  for (const Gadget& k : g) {
    ri.candidates.main.push_back(find_edge(ri.polygon, k.rs, k.ts));
    ri.candidates.second.push_back(find_edge(ri.polygon, k.ts, k.lt));
    ri.spikes.push_back(SimplePolygon({k.ts, k.lt, k.bt}));
  }
  return ri;
}

VerificationReport verify_instance(const ReductionInstance& ri, bool strict) {
  VerificationReport rep;
  const SimplePolygon& p = ri.polygon;
  const std::size_t m = ri.source.values.size();
  auto fail = [&](const std::string& why) {
    if (rep.failure.empty()) rep.failure = why;
  };

  for (const Point& v : p.vertices())
    rep.max_coordinate_bits = std::max({rep.max_coordinate_bits, bit_length(v.x), bit_length(v.y)});

  rep.simple = p.size() >= 3 && ring_is_simple(p.vertices()) && signed_area(p.vertices()) > 0;
  if (!rep.simple) {
    fail("(a) polygon is not simple");
    if (strict) throw Error(ErrorCode::VerificationFailed, rep.failure);
    return rep;
  }
  if (ri.candidates.main.size() != m || ri.spikes.size() != m)
    throw Error(ErrorCode::InvalidInstance, "candidate list does not match the value list");
  if (point_in_polygon(ri.q, p) != Location::Interior)
    throw Error(ErrorCode::QueryOutsidePolygon, "query point is not interior");

  const Region spikes = spikes_union(ri);
  const VisibilityPolygon vp = visibility_polygon(p, ri.q);
  rep.direct_ok = vp.region.area() == polygon_area(p) - spikes.area() &&
                  region_intersection(vp.region, spikes).area() == 0;

  std::vector<Region> added;
  rep.exact = rep.simple;
  rep.exclusive = rep.simple;
  for (std::size_t i = 0; i < m && rep.simple; ++i) {
    const Region spike(ri.spikes[i]);
    rep.spike_area.push_back(spike.area());
    added.push_back(main_added(ri, i));
    const Rational a = added.back().area();
    rep.added_per_value.push_back(a);
    if (a != ri.source.values[i] || region_intersection(added.back(), spike).area() != a) {
      rep.exact = false;
      fail("(b) main edge " + std::to_string(ri.candidates.main[i]) + " adds " + to_wire(a) +
           ", expected " + std::to_string(ri.source.values[i]));
    }
  }
  for (std::size_t i = 0; i < added.size(); ++i)
    for (std::size_t j = 0; j < ri.spikes.size(); ++j) {
      if (i == j) continue;
      if (region_intersection(added[i], Region(ri.spikes[j])).area() != 0) {
        rep.exclusive = false;
        fail("(c) main edge " + std::to_string(ri.candidates.main[i]) + " reaches spike " +
             std::to_string(j));
      }
    }

  if (ri.kind != ReductionKind::SpecularSingle && rep.simple) {
    if (ri.candidates.base) {
      const auto ev = diffuse_extend(p, ri.q, {{*ri.candidates.base}, ReflectionKind::Diffuse, 1});
      rep.base_leak = region_intersection(ev.added, spikes).area();
      if (!(rep.base_leak < Rational(1) / Rational(m * m)))
        fail("(d) base edge leaks " + to_wire(rep.base_leak) + " into the spikes");
    }
    if (ri.kind == ReductionKind::DiffuseSingle) {
      std::vector<std::size_t> cand(ri.candidates.main);
      for (const auto& s : ri.candidates.second)
        if (s) cand.push_back(*s);
      if (ri.candidates.base) cand.push_back(*ri.candidates.base);
      for (std::size_t e = 0; e < p.size(); ++e) {
        if (std::find(cand.begin(), cand.end(), e) != cand.end()) continue;
        const auto ev = diffuse_extend(p, ri.q, {{e}, ReflectionKind::Diffuse, 1});
        if (region_intersection(ev.added, spikes).area() != 0) {
          rep.non_candidates_zero = false;
          fail("(d) non-candidate edge " + std::to_string(e) + " reaches a spike");
        }
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        const auto& second = ri.candidates.second[i];
        if (!second || !ri.candidates.base) {
          rep.exclusive = false;
          fail("(c) value " + std::to_string(i) + " has no two-bounce route");
          continue;
        }
        if (!visible_edge_parts(p, ri.q, *second).empty()) {
          rep.exclusive = false;
          fail("(c) second edge " + std::to_string(*second) + " is directly lit");
        }
        const auto ev = diffuse_extend(
            p, ri.q, {{*ri.candidates.base, *second}, ReflectionKind::Diffuse, 2});
        const Region spike(ri.spikes[i]);
        if (region_intersection(ev.visible(), spike).area() != spike.area()) {
          rep.exclusive = false;
          fail("(c) base and second edge " + std::to_string(*second) + " miss part of spike " +
               std::to_string(i));
        }
      }
    }
  }
  if (!rep.direct_ok) fail("(b) query point sees part of a spike or misses visible area");

  if (strict && !rep.ok()) throw Error(ErrorCode::VerificationFailed, rep.failure);
  return rep;
}

std::optional<std::vector<std::size_t>> subset_sum_bruteforce(const SubsetSumInstance& ss) {
  if (ss.values.size() > 20) throw Error(ErrorCode::TooLarge, "more than 20 values");
  std::optional<std::vector<std::size_t>> found;
  for_each_subset(ss.values.size(), [&](const std::vector<std::size_t>& idx) {
    long sum = 0;
    for (std::size_t i : idx) sum += ss.values[i];
    if (sum != ss.target) return false;
    found = idx;
    return true;
  });
  return found;
}

std::optional<std::vector<std::size_t>> solve_by_enumeration(const ReductionInstance& ri) {
  const std::size_t m = ri.candidates.main.size();
  if (m > 20) throw Error(ErrorCode::TooLarge, "more than 20 candidate edges");
  std::vector<Region> added;
  std::vector<Rational> area;
  for (std::size_t i = 0; i < m; ++i) {
    added.push_back(main_added(ri, i));
    area.push_back(added.back().area());
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (region_intersection(added[i], added[j]).area() != 0)
        throw Error(ErrorCode::VerificationFailed, "main edge regions overlap");
  std::optional<std::vector<std::size_t>> found;
  for_each_subset(m, [&](const std::vector<std::size_t>& idx) {
    Rational sum = 0;
    for (std::size_t i : idx) sum += area[i];
    if (sum != ri.k) return false;
    found = idx;
    return true;
  });
  return found;
}

Rational added_area_for(const ReductionInstance& ri, const std::vector<std::size_t>& chosen) {
  Region acc;
  for (std::size_t i : chosen) {
    if (i >= ri.candidates.main.size())
      throw Error(ErrorCode::InvalidArgument, "value index out of range");
    acc = region_union(acc, main_added(ri, i));
  }
  return acc.area();
}

}  // namespace mg
