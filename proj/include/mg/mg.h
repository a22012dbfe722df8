#ifndef MG_MG_H
#define MG_MG_H

/* C interface to the mirror-guard library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Rationals cross the boundary as "p/q" strings. Every
 * function returning mg_status leaves a message for mg_last_error() on
 * failure; that message is per thread and valid until the next failing call.
 * Strings returned through char** are owned by the caller; release them with
 * mg_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MG_API __declspec(dllexport)
#else
#define MG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mg_status {
  MG_OK = 0,
  MG_ERR_INVALID_ARGUMENT = 1,
  MG_ERR_PARSE = 2,
  MG_ERR_QUERY_OUTSIDE_POLYGON = 3,
  MG_ERR_SPEC_MISMATCH = 4,
  MG_ERR_BIT_BLOWUP = 5,
  MG_ERR_VERIFICATION_FAILED = 6,
  MG_ERR_NOT_SIMPLE = 7,
  MG_ERR_SEGMENT_OUTSIDE_POLYGON = 8,
  MG_ERR_SOURCE_ON_MIRROR_LINE = 9,
  MG_ERR_BUDGET_EXCEEDED = 10,
  MG_ERR_TOO_LARGE = 11,
  MG_ERR_GRAPH_DISCONNECTED = 12,
  MG_ERR_COVERAGE_CERTIFICATION_FAILED = 13,
  MG_ERR_NOT_A_FUNNEL = 14,
  MG_ERR_NOT_WEAKLY_VISIBLE = 15,
  MG_ERR_INVALID_INSTANCE = 16,
  MG_ERR_INTERNAL = 99
} mg_status;

typedef enum mg_reflection_kind { MG_DIFFUSE = 0, MG_SPECULAR = 1 } mg_reflection_kind;

typedef enum mg_guard_mode {
  MG_GUARD_GREEDY = 0,
  MG_GUARD_OPTIMAL = 1,
  MG_GUARD_REDUCE = 2
} mg_guard_mode;

typedef struct mg_polygon mg_polygon;
typedef struct mg_region mg_region;
typedef struct mg_vp mg_vp;
typedef struct mg_extension mg_extension;
typedef struct mg_guard_result mg_guard_result;
typedef struct mg_instance mg_instance;
typedef struct mg_scene mg_scene;

/* Errors and strings. */
MG_API const char* mg_last_error(void);
MG_API const char* mg_status_name(mg_status status);
MG_API void mg_string_free(char* s);

/* Polygons. `coords` holds 2 * n strings: x0, y0, x1, y1, ... */
MG_API mg_status mg_polygon_create(const char* const* coords, size_t n, mg_polygon** out);
MG_API mg_status mg_polygon_clone(const mg_polygon* p, mg_polygon** out);
MG_API void mg_polygon_free(mg_polygon* p);
MG_API size_t mg_polygon_size(const mg_polygon* p);
MG_API mg_status mg_polygon_vertex(const mg_polygon* p, size_t i, char** x, char** y);
MG_API mg_status mg_polygon_area(const mg_polygon* p, char** area);
/* shape: "star", "funnel", "comb" or "staircase". */
MG_API mg_status mg_random_polygon(const char* shape, size_t n, uint64_t seed, mg_polygon** out);
/* A deterministic interior point for the given seed. */
MG_API mg_status mg_random_interior_point(const mg_polygon* p, uint64_t seed, char** x, char** y);

/* Regions (finite unions of convex parts). */
MG_API void mg_region_free(mg_region* r);
MG_API mg_status mg_region_area(const mg_region* r, char** area);
MG_API mg_status mg_region_contains(const mg_region* r, const char* x, const char* y, int* inside);
MG_API size_t mg_region_loop_count(const mg_region* r);
MG_API size_t mg_region_loop_size(const mg_region* r, size_t loop);
MG_API mg_status mg_region_loop_vertex(const mg_region* r, size_t loop, size_t i, char** x,
                                       char** y);

/* Visibility. */
MG_API mg_status mg_visibility_polygon(const mg_polygon* p, const char* qx, const char* qy,
                                       mg_vp** out);
MG_API void mg_vp_free(mg_vp* vp);
MG_API mg_status mg_vp_area(const mg_vp* vp, char** area);
MG_API size_t mg_vp_vertex_count(const mg_vp* vp);
MG_API mg_status mg_vp_vertex(const mg_vp* vp, size_t i, char** x, char** y);
MG_API size_t mg_vp_window_count(const mg_vp* vp);
/* Writes "ax ay bx by". */
MG_API mg_status mg_vp_window(const mg_vp* vp, size_t i, char** segment);
MG_API mg_status mg_vp_region(const mg_vp* vp, mg_region** out);
MG_API mg_status mg_weak_visibility(const mg_polygon* p, size_t edge, mg_region** out);

/* Reflection. */
MG_API mg_status mg_extend(const mg_polygon* p, const char* qx, const char* qy,
                           const size_t* edges, size_t n_edges, mg_reflection_kind kind,
                           int bounces, mg_extension** out);
/* Diffuse bounces along a fixed edge sequence, one edge per bounce. */
MG_API mg_status mg_extend_sequence(const mg_polygon* p, const char* qx, const char* qy,
                                    const size_t* sequence, size_t n, mg_extension** out);
MG_API void mg_extension_free(mg_extension* ev);
MG_API mg_status mg_extension_added_area(const mg_extension* ev, char** area);
MG_API mg_status mg_extension_visible_area(const mg_extension* ev, char** area);
MG_API mg_status mg_extension_direct(const mg_extension* ev, mg_region** out);
MG_API mg_status mg_extension_added(const mg_extension* ev, mg_region** out);
MG_API size_t mg_extension_part_count(const mg_extension* ev);
MG_API mg_status mg_extension_part(const mg_extension* ev, size_t i, size_t* edge, int* depth,
                                   size_t* n_subsegments);
/* Writes "ax ay bx by". */
MG_API mg_status mg_extension_subsegment(const mg_extension* ev, size_t i, size_t j,
                                         char** segment);

/* Guards. Reduce mode starts from an optimal r = 0 cover (greedy above 16
 * vertices) and prunes it for r bounces. */
MG_API mg_status mg_guard(const mg_polygon* p, int bounces, mg_guard_mode mode,
                          mg_guard_result** out);
MG_API void mg_guard_result_free(mg_guard_result* g);
MG_API size_t mg_guard_count(const mg_guard_result* g);
MG_API size_t mg_guard_vertex(const mg_guard_result* g, size_t i);
MG_API size_t mg_guard_cell_count(const mg_guard_result* g);
/* Size of the starting cover and the bound ceil(alpha / (1 + floor(r / 4))). */
MG_API size_t mg_guard_start_count(const mg_guard_result* g);
MG_API size_t mg_guard_bound(const mg_guard_result* g);

/* Funnels: best mirror subset among the tangent candidates. */
MG_API mg_status mg_funnel_best_mirrors(const mg_polygon* p, const char* qx, const char* qy,
                                        int include_chord, size_t* edges, size_t capacity,
                                        size_t* count, char** added, int* full_coverage);

/* Instance files. */
MG_API mg_status mg_instance_parse(const char* text, mg_instance** out);
MG_API mg_status mg_instance_read(const char* path, mg_instance** out);
MG_API mg_status mg_instance_print(const mg_instance* f, char** text);
MG_API mg_status mg_instance_write(const mg_instance* f, const char* path);
MG_API void mg_instance_free(mg_instance* f);
MG_API mg_status mg_instance_polygon(const mg_instance* f, mg_polygon** out);
/* MG_ERR_INVALID_ARGUMENT when the file has no query point. */
MG_API mg_status mg_instance_query(const mg_instance* f, char** x, char** y);
/* *value is NULL when the key is absent. */
MG_API mg_status mg_instance_expect(const mg_instance* f, const char* key, char** value);
MG_API int mg_instance_equal(const mg_instance* a, const mg_instance* b);

/* Subset-Sum reductions. kind: "specular", "diffuse" or "diffuse-multi".
 * The instance is always produced when generation succeeds; `verified` is 1
 * when every verification clause holds, and the report is embedded. */
MG_API mg_status mg_reduce_gen(const char* kind, const long* values, size_t m, long target,
                               mg_instance** out, int* verified);
/* Recomputes the verification clauses for a reduction file. */
MG_API mg_status mg_reduce_verify(const mg_instance* f, char** failure);
/* Indices of the subset found by area enumeration; *solvable is 0 when none. */
MG_API mg_status mg_reduce_solve(const mg_instance* f, size_t* indices, size_t capacity,
                                 size_t* count, int* solvable);

/* SVG scenes. Colors may be NULL for the palette. */
MG_API mg_status mg_scene_create(const mg_polygon* p, mg_scene** out);
MG_API void mg_scene_free(mg_scene* s);
MG_API mg_status mg_scene_set_query(mg_scene* s, const char* x, const char* y);
MG_API mg_status mg_scene_add_region(mg_scene* s, const char* name, const mg_region* r,
                                     const char* color);
MG_API mg_status mg_scene_add_segment(mg_scene* s, const char* layer, const char* ax,
                                      const char* ay, const char* bx, const char* by,
                                      const char* color);
MG_API mg_status mg_scene_add_marker(mg_scene* s, const char* x, const char* y);
/* Adds the instance's query, candidate edges and spikes as layers. */
MG_API mg_status mg_scene_add_instance(mg_scene* s, const mg_instance* f);
MG_API mg_status mg_scene_render(const mg_scene* s, char** svg);

#ifdef __cplusplus
}
#endif

#endif
