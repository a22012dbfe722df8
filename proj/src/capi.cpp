#include "mg/mg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mg/error.hpp"
#include "mg/guard.hpp"
#include "mg/instance_file.hpp"
#include "mg/random_polygons.hpp"
#include "mg/redgen.hpp"
#include "mg/reflect.hpp"
#include "mg/special.hpp"
#include "mg/svg.hpp"
#include "mg/visibility.hpp"

struct mg_polygon {
  mg::SimplePolygon p;
};
struct mg_region {
  mg::Region r;
  std::vector<std::vector<mg::Point>> loops;
};
struct mg_vp {
  mg::VisibilityPolygon vp;
};
struct mg_extension {
  mg::ExtendedVisibility ev;
};
struct mg_guard_result {
  mg::GuardSolution s;
  std::size_t start = 0;
  std::size_t bound = 0;
};
struct mg_instance {
  mg::InstanceFile f;
};
struct mg_scene {
  mg::SvgScene s;
};

namespace {

thread_local std::string g_last_error;

mg_status fail(mg_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <class F>
mg_status guarded(F&& body) {
  try {
    body();
    return MG_OK;
  } catch (const mg::Error& e) {
    return fail(static_cast<mg_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MG_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw mg::Error(mg::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  require(out != nullptr, "null output pointer");
  *out = dup(s);
}

void put_point(const mg::Point& p, char** x, char** y) {
  require(x && y, "null output pointer");
  char* sx = dup(mg::to_wire(p.x));
  try {
    *y = dup(mg::to_wire(p.y));
  } catch (...) {
    std::free(sx);
    throw;
  }
  *x = sx;
}

mg::Point point_of(const char* x, const char* y) {
  require(x && y, "null coordinate");
  return {mg::parse_rational(x), mg::parse_rational(y)};
}

std::string segment_text(const mg::Segment& s) {
  return mg::to_wire(s.a.x) + " " + mg::to_wire(s.a.y) + " " + mg::to_wire(s.b.x) + " " +
         mg::to_wire(s.b.y);
}

mg_region* wrap(mg::Region r) {
  auto* out = new mg_region{std::move(r), {}};
  out->loops = out->r.outline();
  return out;
}

}  // namespace

extern "C" {

const char* mg_last_error(void) { return g_last_error.c_str(); }

const char* mg_status_name(mg_status status) {
  if (status == MG_OK) return "Ok";
  return mg::error_code_name(static_cast<mg::ErrorCode>(static_cast<int>(status)));
}

void mg_string_free(char* s) { std::free(s); }

mg_status mg_polygon_create(const char* const* coords, size_t n, mg_polygon** out) {
  return guarded([&] {
    require(coords && out, "null argument");
    std::vector<mg::Point> ring;
    for (size_t i = 0; i < n; ++i) ring.push_back(point_of(coords[2 * i], coords[2 * i + 1]));
    if (ring.size() < 3) throw mg::Error(mg::ErrorCode::NotSimple, "fewer than three vertices");
    *out = new mg_polygon{mg::SimplePolygon(std::move(ring))};
  });
}

mg_status mg_polygon_clone(const mg_polygon* p, mg_polygon** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = new mg_polygon{p->p};
  });
}

void mg_polygon_free(mg_polygon* p) { delete p; }

size_t mg_polygon_size(const mg_polygon* p) { return p ? p->p.size() : 0; }

mg_status mg_polygon_vertex(const mg_polygon* p, size_t i, char** x, char** y) {
  return guarded([&] {
    require(p && i < p->p.size(), "vertex index out of range");
    put_point(p->p.vertex(i), x, y);
  });
}

mg_status mg_polygon_area(const mg_polygon* p, char** area) {
  return guarded([&] {
    require(p != nullptr, "null polygon");
    put(area, mg::to_wire(mg::polygon_area(p->p)));
  });
}

mg_status mg_random_polygon(const char* shape, size_t n, uint64_t seed, mg_polygon** out) {
  return guarded([&] {
    require(shape && out, "null argument");
    const std::string s(shape);
    mg::RandomShape kind;
    if (s == "star") kind = mg::RandomShape::Star;
    else if (s == "funnel") kind = mg::RandomShape::Funnel;
    else if (s == "comb") kind = mg::RandomShape::Comb;
    else if (s == "staircase") kind = mg::RandomShape::Staircase;
    else throw mg::Error(mg::ErrorCode::InvalidArgument, "unknown shape '" + s + "'");
    *out = new mg_polygon{mg::random_polygon(kind, n, seed)};
  });
}

mg_status mg_random_interior_point(const mg_polygon* p, uint64_t seed, char** x, char** y) {
  return guarded([&] {
    require(p != nullptr, "null polygon");
    put_point(mg::random_interior_points(p->p, 1, seed).front(), x, y);
  });
}

void mg_region_free(mg_region* r) { delete r; }

mg_status mg_region_area(const mg_region* r, char** area) {
  return guarded([&] {
    require(r != nullptr, "null region");
    put(area, mg::to_wire(r->r.area()));
  });
}

mg_status mg_region_contains(const mg_region* r, const char* x, const char* y, int* inside) {
  return guarded([&] {
    require(r && inside, "null argument");
    *inside = r->r.contains(point_of(x, y)) ? 1 : 0;
  });
}

size_t mg_region_loop_count(const mg_region* r) { return r ? r->loops.size() : 0; }

size_t mg_region_loop_size(const mg_region* r, size_t loop) {
  return r && loop < r->loops.size() ? r->loops[loop].size() : 0;
}

mg_status mg_region_loop_vertex(const mg_region* r, size_t loop, size_t i, char** x, char** y) {
  return guarded([&] {
    require(r && loop < r->loops.size() && i < r->loops[loop].size(), "index out of range");
    put_point(r->loops[loop][i], x, y);
  });
}

mg_status mg_visibility_polygon(const mg_polygon* p, const char* qx, const char* qy, mg_vp** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = new mg_vp{mg::visibility_polygon(p->p, point_of(qx, qy))};
  });
}

void mg_vp_free(mg_vp* vp) { delete vp; }

mg_status mg_vp_area(const mg_vp* vp, char** area) {
  return guarded([&] {
    require(vp != nullptr, "null visibility polygon");
    put(area, mg::to_wire(vp->vp.region.area()));
  });
}

size_t mg_vp_vertex_count(const mg_vp* vp) { return vp ? vp->vp.polygon.size() : 0; }

mg_status mg_vp_vertex(const mg_vp* vp, size_t i, char** x, char** y) {
  return guarded([&] {
    require(vp && i < vp->vp.polygon.size(), "vertex index out of range");
    put_point(vp->vp.polygon.vertex(i), x, y);
  });
}

size_t mg_vp_window_count(const mg_vp* vp) { return vp ? vp->vp.windows.size() : 0; }

mg_status mg_vp_window(const mg_vp* vp, size_t i, char** segment) {
  return guarded([&] {
    require(vp && i < vp->vp.windows.size(), "window index out of range");
    put(segment, segment_text(vp->vp.windows[i]));
  });
}

mg_status mg_vp_region(const mg_vp* vp, mg_region** out) {
  return guarded([&] {
    require(vp && out, "null argument");
    *out = wrap(vp->vp.region);
  });
}

mg_status mg_weak_visibility(const mg_polygon* p, size_t edge, mg_region** out) {
  return guarded([&] {
    require(p && out, "null argument");
    require(edge < p->p.size(), "edge index out of range");
    *out = wrap(mg::weak_visibility_polygon(p->p, p->p.edge(edge)));
  });
}

mg_status mg_extend(const mg_polygon* p, const char* qx, const char* qy, const size_t* edges,
                    size_t n_edges, mg_reflection_kind kind, int bounces, mg_extension** out) {
  return guarded([&] {
    require(p && out && (edges || n_edges == 0), "null argument");
    mg::ReflectionSpec spec;
    spec.edges.assign(edges, edges + n_edges);
    spec.kind = kind == MG_SPECULAR ? mg::ReflectionKind::Specular : mg::ReflectionKind::Diffuse;
    spec.max_bounces = bounces;
    *out = new mg_extension{mg::extend(p->p, point_of(qx, qy), spec)};
  });
}

mg_status mg_extend_sequence(const mg_polygon* p, const char* qx, const char* qy,
                             const size_t* sequence, size_t n, mg_extension** out) {
  return guarded([&] {
    require(p && out && (sequence || n == 0), "null argument");
    *out = new mg_extension{mg::diffuse_extend_sequence(
        p->p, point_of(qx, qy), std::vector<std::size_t>(sequence, sequence + n))};
  });
}

void mg_extension_free(mg_extension* ev) { delete ev; }

mg_status mg_extension_added_area(const mg_extension* ev, char** area) {
  return guarded([&] {
    require(ev != nullptr, "null extension");
    put(area, mg::to_wire(ev->ev.added.area()));
  });
}

mg_status mg_extension_visible_area(const mg_extension* ev, char** area) {
  return guarded([&] {
    require(ev != nullptr, "null extension");
    put(area, mg::to_wire(ev->ev.visible().area()));
  });
}

mg_status mg_extension_direct(const mg_extension* ev, mg_region** out) {
  return guarded([&] {
    require(ev && out, "null argument");
    *out = wrap(ev->ev.direct.region);
  });
}

mg_status mg_extension_added(const mg_extension* ev, mg_region** out) {
  return guarded([&] {
    require(ev && out, "null argument");
    *out = wrap(ev->ev.added);
  });
}

size_t mg_extension_part_count(const mg_extension* ev) {
  return ev ? ev->ev.illumination.size() : 0;
}

mg_status mg_extension_part(const mg_extension* ev, size_t i, size_t* edge, int* depth,
                            size_t* n_subsegments) {
  return guarded([&] {
    require(ev && i < ev->ev.illumination.size(), "part index out of range");
    const auto& part = ev->ev.illumination[i];
    if (edge) *edge = part.edge;
    if (depth) *depth = part.depth;
    if (n_subsegments) *n_subsegments = part.subsegments.size();
  });
}

mg_status mg_extension_subsegment(const mg_extension* ev, size_t i, size_t j, char** segment) {
  return guarded([&] {
    require(ev && i < ev->ev.illumination.size() &&
                j < ev->ev.illumination[i].subsegments.size(),
            "subsegment index out of range");
    put(segment, segment_text(ev->ev.illumination[i].subsegments[j]));
  });
}

mg_status mg_guard(const mg_polygon* p, int bounces, mg_guard_mode mode, mg_guard_result** out) {
  return guarded([&] {
    require(p && out, "null argument");
    require(bounces >= 0, "negative bounce count");
    auto* res = new mg_guard_result;
    try {
      switch (mode) {
        case MG_GUARD_GREEDY:
          res->s = mg::greedy_cover(p->p, bounces);
          break;
        case MG_GUARD_OPTIMAL:
          res->s = mg::optimal_cover_bruteforce(p->p, bounces);
          break;
        case MG_GUARD_REDUCE: {
          const mg::GuardSolution start = p->p.size() <= 16
                                              ? mg::optimal_cover_bruteforce(p->p, 0)
                                              : mg::greedy_cover(p->p, 0);
          res->start = start.guards.size();
          res->bound = mg::reduction_bound(res->start, bounces);
          res->s = mg::spanning_tree_reduce(p->p, start, bounces);
          break;
        }
        default:
          throw mg::Error(mg::ErrorCode::InvalidArgument, "unknown guard mode");
      }
      if (mode != MG_GUARD_REDUCE) res->start = res->bound = res->s.guards.size();
    } catch (...) {
      delete res;
      throw;
    }
    *out = res;
  });
}

void mg_guard_result_free(mg_guard_result* g) { delete g; }
size_t mg_guard_count(const mg_guard_result* g) { return g ? g->s.guards.size() : 0; }
size_t mg_guard_vertex(const mg_guard_result* g, size_t i) {
  return g && i < g->s.guards.size() ? g->s.guards[i] : static_cast<size_t>(-1);
}
size_t mg_guard_cell_count(const mg_guard_result* g) { return g ? g->s.cell_count : 0; }
size_t mg_guard_start_count(const mg_guard_result* g) { return g ? g->start : 0; }
size_t mg_guard_bound(const mg_guard_result* g) { return g ? g->bound : 0; }

mg_status mg_funnel_best_mirrors(const mg_polygon* p, const char* qx, const char* qy,
                                 int include_chord, size_t* edges, size_t capacity, size_t* count,
                                 char** added, int* full_coverage) {
  return guarded([&] {
    require(p && count, "null argument");
    const auto choice =
        mg::funnel_best_mirrors(mg::detect_funnel(p->p), point_of(qx, qy), include_chord != 0);
    require(choice.edges.size() <= capacity || !edges, "edge buffer too small");
    *count = choice.edges.size();
    if (edges) std::copy(choice.edges.begin(), choice.edges.end(), edges);
    if (full_coverage) *full_coverage = choice.full_coverage ? 1 : 0;
    if (added) *added = dup(mg::to_wire(choice.added));
  });
}

mg_status mg_instance_parse(const char* text, mg_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new mg_instance{mg::parse_instance(text)};
  });
}

mg_status mg_instance_read(const char* path, mg_instance** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new mg_instance{mg::read_instance_file(path)};
  });
}

mg_status mg_instance_print(const mg_instance* f, char** text) {
  return guarded([&] {
    require(f != nullptr, "null instance");
    put(text, mg::print_instance(f->f));
  });
}

mg_status mg_instance_write(const mg_instance* f, const char* path) {
  return guarded([&] {
    require(f && path, "null argument");
    mg::write_instance_file(path, f->f);
  });
}

void mg_instance_free(mg_instance* f) { delete f; }

mg_status mg_instance_polygon(const mg_instance* f, mg_polygon** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = new mg_polygon{f->f.polygon};
  });
}

mg_status mg_instance_query(const mg_instance* f, char** x, char** y) {
  return guarded([&] {
    require(f != nullptr, "null instance");
    require(f->f.query.has_value(), "instance has no query point");
    put_point(*f->f.query, x, y);
  });
}

mg_status mg_instance_expect(const mg_instance* f, const char* key, char** value) {
  return guarded([&] {
    require(f && key && value, "null argument");
    const auto v = f->f.expected(key);
    *value = v ? dup(*v) : nullptr;
  });
}

int mg_instance_equal(const mg_instance* a, const mg_instance* b) {
  return a && b && a->f == b->f ? 1 : 0;
}

mg_status mg_reduce_gen(const char* kind, const long* values, size_t m, long target,
                        mg_instance** out, int* verified) {
  return guarded([&] {
    require(kind && out && (values || m == 0), "null argument");
    const mg::ReductionKind k = mg::parse_reduction_kind(kind);
    const mg::SubsetSumInstance ss{std::vector<long>(values, values + m), target};
    const mg::ReductionInstance ri =
        k == mg::ReductionKind::SpecularSingle
            ? mg::gen_specular(ss)
            : mg::gen_diffuse(ss, k == mg::ReductionKind::DiffuseMulti);
    const mg::VerificationReport rep = mg::verify_instance(ri, false);
    *out = new mg_instance{mg::to_instance_file(ri, &rep)};
    if (verified) *verified = rep.ok() ? 1 : 0;
  });
}

mg_status mg_reduce_verify(const mg_instance* f, char** failure) {
  return guarded([&] {
    require(f != nullptr, "null instance");
    const auto rep = mg::verify_instance(mg::reduction_from_file(f->f), false);
    if (failure) *failure = dup(rep.failure);
    if (!rep.ok()) throw mg::Error(mg::ErrorCode::VerificationFailed, rep.failure);
  });
}

mg_status mg_reduce_solve(const mg_instance* f, size_t* indices, size_t capacity, size_t* count,
                          int* solvable) {
  return guarded([&] {
    require(f && count && solvable, "null argument");
    const auto found = mg::solve_by_enumeration(mg::reduction_from_file(f->f));
    *solvable = found ? 1 : 0;
    *count = found ? found->size() : 0;
    if (found && indices) {
      require(found->size() <= capacity, "index buffer too small");
      std::copy(found->begin(), found->end(), indices);
    }
  });
}

mg_status mg_scene_create(const mg_polygon* p, mg_scene** out) {
  return guarded([&] {
    require(p && out, "null argument");
    auto* s = new mg_scene;
    s->s.polygon = p->p;
    *out = s;
  });
}

void mg_scene_free(mg_scene* s) { delete s; }

mg_status mg_scene_set_query(mg_scene* s, const char* x, const char* y) {
  return guarded([&] {
    require(s != nullptr, "null scene");
    s->s.query = point_of(x, y);
  });
}

mg_status mg_scene_add_region(mg_scene* s, const char* name, const mg_region* r,
                              const char* color) {
  return guarded([&] {
    require(s && name && r, "null argument");
    s->s.regions.push_back({name, r->r, color ? color : ""});
  });
}

mg_status mg_scene_add_segment(mg_scene* s, const char* layer, const char* ax, const char* ay,
                               const char* bx, const char* by, const char* color) {
  return guarded([&] {
    require(s && layer, "null argument");
    const mg::Segment seg{point_of(ax, ay), point_of(bx, by)};
    for (auto& l : s->s.segments)
      if (l.name == layer) {
        l.segments.push_back(seg);
        return;
      }
    s->s.segments.push_back({layer, {seg}, color ? color : ""});
  });
}

mg_status mg_scene_add_marker(mg_scene* s, const char* x, const char* y) {
  return guarded([&] {
    require(s != nullptr, "null scene");
    s->s.markers.push_back(point_of(x, y));
  });
}

mg_status mg_scene_add_instance(mg_scene* s, const mg_instance* f) {
  return guarded([&] {
    require(s && f, "null argument");
    const mg::InstanceFile& file = f->f;
    if (file.query) s->s.query = file.query;
    if (!file.candidates) return;
    const auto& c = *file.candidates;
    mg::Region spikes;
    for (const auto& ring : c.spikes)
      spikes = mg::region_union(spikes, mg::Region(mg::SimplePolygon(ring)));
    if (!c.spikes.empty()) s->s.regions.push_back({"spikes", spikes, "#c0504d"});
    auto layer = [&](const char* name, const char* color, auto&& edges) {
      mg::SvgSegmentLayer l{name, {}, color};
      for (const auto& e : edges)
        if (e && *e < file.polygon.size()) l.segments.push_back(file.polygon.edge(*e));
      if (!l.segments.empty()) s->s.segments.push_back(std::move(l));
    };
    std::vector<std::optional<std::size_t>> main(c.main.begin(), c.main.end());
    layer("main", "#1f77b4", main);
    layer("second", "#2ca02c", c.second);
    layer("base", "#9467bd", std::vector<std::optional<std::size_t>>{c.base});
  });
}

mg_status mg_scene_render(const mg_scene* s, char** svg) {
  return guarded([&] {
    require(s != nullptr, "null scene");
    put(svg, mg::render_svg(s->s));
  });
}

}  // extern "C"
