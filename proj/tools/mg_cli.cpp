#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mg/mg.h"

namespace {

struct Failure {
  mg_status status;
};

void check(mg_status s) {
  if (s != MG_OK) throw Failure{s};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  mg_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  operator T*() const { return p; }
};

using Polygon = Handle<mg_polygon, mg_polygon_free>;
using RegionH = Handle<mg_region, mg_region_free>;
using Vp = Handle<mg_vp, mg_vp_free>;
using Extension = Handle<mg_extension, mg_extension_free>;
using Guard = Handle<mg_guard_result, mg_guard_result_free>;
using Instance = Handle<mg_instance, mg_instance_free>;
using Scene = Handle<mg_scene, mg_scene_free>;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "cannot write '%s'\n", path.c_str());
    throw Failure{MG_ERR_INVALID_ARGUMENT};
  }
  out << text;
}

// Query from --q, falling back to the file's query section.
std::pair<std::string, std::string> query_of(const std::vector<std::string>& q,
                                             const mg_instance* f) {
  if (q.size() == 2) return {q[0], q[1]};
  char *x = nullptr, *y = nullptr;
  check(mg_instance_query(f, &x, &y));
  return {take(x), take(y)};
}

std::string point_text(char* x, char* y) { return take(x) + " " + take(y); }

std::string region_svg(const mg_polygon* p, const std::pair<std::string, std::string>& q,
                       const std::vector<std::pair<std::string, const mg_region*>>& regions,
                       const std::vector<std::pair<std::string, std::vector<std::string>>>& segs) {
  Scene scene;
  check(mg_scene_create(p, scene.out()));
  check(mg_scene_set_query(scene, q.first.c_str(), q.second.c_str()));
  for (const auto& [name, r] : regions) check(mg_scene_add_region(scene, name.c_str(), r, nullptr));
  for (const auto& [name, list] : segs)
    for (const auto& s : list) {
      std::istringstream in(s);
      std::string ax, ay, bx, by;
      in >> ax >> ay >> bx >> by;
      check(mg_scene_add_segment(scene, name.c_str(), ax.c_str(), ay.c_str(), bx.c_str(),
                                 by.c_str(), nullptr));
    }
  char* svg = nullptr;
  check(mg_scene_render(scene, &svg));
  return take(svg);
}

int cmd_vp(const std::string& input, const std::vector<std::string>& qarg,
           const std::string& output, const std::string& svg_path) {
  Instance f;
  check(mg_instance_read(input.c_str(), f.out()));
  Polygon p;
  check(mg_instance_polygon(f, p.out()));
  const auto q = query_of(qarg, f);
  Vp vp;
  check(mg_visibility_polygon(p, q.first.c_str(), q.second.c_str(), vp.out()));
  char* area = nullptr;
  check(mg_vp_area(vp, &area));
  std::ostringstream out;
  out << "area " << take(area) << "\n";
  out << "vertices " << mg_vp_vertex_count(vp) << "\n";
  for (size_t i = 0; i < mg_vp_vertex_count(vp); ++i) {
    char *x = nullptr, *y = nullptr;
    check(mg_vp_vertex(vp, i, &x, &y));
    out << point_text(x, y) << "\n";
  }
  std::vector<std::string> windows;
  out << "windows " << mg_vp_window_count(vp) << "\n";
  for (size_t i = 0; i < mg_vp_window_count(vp); ++i) {
    char* w = nullptr;
    check(mg_vp_window(vp, i, &w));
    windows.push_back(take(w));
    out << windows.back() << "\n";
  }
  emit(output, out.str());
  if (!svg_path.empty()) {
    RegionH r;
    check(mg_vp_region(vp, r.out()));
    emit(svg_path, region_svg(p, q, {{"visibility", r}}, {{"windows", windows}}));
  }
  return 0;
}

std::vector<size_t> parse_edges(const std::string& text) {
  std::vector<size_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
      std::fprintf(stderr, "bad edge index '%s'\n", tok.c_str());
      throw Failure{MG_ERR_INVALID_ARGUMENT};
    }
    out.push_back(std::stoul(tok));
  }
  return out;
}

int cmd_extend(const std::string& input, const std::vector<std::string>& qarg,
               const std::string& edges_text, const std::string& kind, int bounces,
               const std::string& output, const std::string& svg_path) {
  Instance f;
  check(mg_instance_read(input.c_str(), f.out()));
  Polygon p;
  check(mg_instance_polygon(f, p.out()));
  const auto q = query_of(qarg, f);
  std::vector<size_t> edges;
  if (edges_text == "all") {
    for (size_t i = 0; i < mg_polygon_size(p); ++i) edges.push_back(i);
  } else {
    edges = parse_edges(edges_text);
  }
  Extension ev;
  check(mg_extend(p, q.first.c_str(), q.second.c_str(), edges.data(), edges.size(),
                  kind == "specular" ? MG_SPECULAR : MG_DIFFUSE, bounces, ev.out()));
  char* added = nullptr;
  char* visible = nullptr;
  check(mg_extension_added_area(ev, &added));
  check(mg_extension_visible_area(ev, &visible));
  std::ostringstream out;
  out << "added " << take(added) << "\nvisible " << take(visible) << "\n";
  std::vector<std::string> lit;
  for (size_t i = 0; i < mg_extension_part_count(ev); ++i) {
    size_t edge = 0, n = 0;
    int depth = 0;
    check(mg_extension_part(ev, i, &edge, &depth, &n));
    for (size_t j = 0; j < n; ++j) {
      char* s = nullptr;
      check(mg_extension_subsegment(ev, i, j, &s));
      lit.push_back(take(s));
      out << "lit edge " << edge << " depth " << depth << " " << lit.back() << "\n";
    }
  }
  emit(output, out.str());
  if (!svg_path.empty()) {
    RegionH direct, add;
    check(mg_extension_direct(ev, direct.out()));
    check(mg_extension_added(ev, add.out()));
    std::vector<std::string> mirror;
    for (size_t e : edges) {
      if (e >= mg_polygon_size(p)) continue;
      char *ax, *ay, *bx, *by;
      check(mg_polygon_vertex(p, e, &ax, &ay));
      check(mg_polygon_vertex(p, (e + 1) % mg_polygon_size(p), &bx, &by));
      mirror.push_back(take(ax) + " " + take(ay) + " " + take(bx) + " " + take(by));
    }
    emit(svg_path, region_svg(p, q, {{"direct", direct}, {"added", add}},
                              {{"reflecting", mirror}, {"illuminated", lit}}));
  }
  return 0;
}

int cmd_guard(const std::string& input, int bounces, const std::string& mode,
              const std::string& output) {
  Instance f;
  check(mg_instance_read(input.c_str(), f.out()));
  Polygon p;
  check(mg_instance_polygon(f, p.out()));
  mg_guard_mode m = MG_GUARD_GREEDY;
  if (mode == "optimal") m = MG_GUARD_OPTIMAL;
  if (mode == "reduce") m = MG_GUARD_REDUCE;
  Guard g;
  check(mg_guard(p, bounces, m, g.out()));
  std::ostringstream out;
  out << "mode " << mode << "\nbounces " << bounces << "\nguards " << mg_guard_count(g) << "\n";
  out << "vertices";
  for (size_t i = 0; i < mg_guard_count(g); ++i) out << ' ' << mg_guard_vertex(g, i);
  out << "\ncells " << mg_guard_cell_count(g) << "\n";
  if (m == MG_GUARD_REDUCE) {
    const bool within = mg_guard_count(g) <= mg_guard_bound(g);
    out << "start " << mg_guard_start_count(g) << "\nbound " << mg_guard_bound(g) << "\n"
        << "within_bound " << (within ? "true" : "false") << "\ncertified true\n";
  }
  emit(output, out.str());
  return 0;
}

int cmd_reduce_gen(const std::string& kind, const std::string& values_text, long target,
                   const std::string& output, bool solve) {
  std::vector<long> values;
  std::stringstream in(values_text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      std::fprintf(stderr, "bad value '%s'\n", tok.c_str());
      return MG_ERR_INVALID_INSTANCE;
    }
  }
  Instance f;
  int verified = 0;
  check(mg_reduce_gen(kind.c_str(), values.data(), values.size(), target, f.out(), &verified));
  char* text = nullptr;
  check(mg_instance_print(f, &text));
  emit(output, take(text));
  if (solve) {
    std::vector<size_t> idx(values.size());
    size_t count = 0;
    int solvable = 0;
    check(mg_reduce_solve(f, idx.data(), idx.size(), &count, &solvable));
    std::ostream& os = (output.empty() || output == "-") ? std::cerr : std::cout;
    os << "solvable " << (solvable ? "true" : "false");
    if (solvable) {
      os << " subset";
      for (size_t i = 0; i < count; ++i) os << ' ' << idx[i];
    }
    os << "\n";
  }
  if (!verified) {
    char* why = nullptr;
    check(mg_instance_expect(f, "failure", &why));
    std::fprintf(stderr, "error: VerificationFailed: %s\n", take(why).c_str());
    return MG_ERR_VERIFICATION_FAILED;
  }
  return 0;
}

int cmd_verify(const std::string& input) {
  Instance f;
  check(mg_instance_read(input.c_str(), f.out()));
  char* why = nullptr;
  check(mg_reduce_verify(f, &why));
  mg_string_free(why);
  std::cout << "verified true\n";
  return 0;
}

int cmd_render(const std::string& input, const std::vector<std::string>& layers,
               const std::string& output) {
  Instance f;
  check(mg_instance_read(input.c_str(), f.out()));
  Polygon p;
  check(mg_instance_polygon(f, p.out()));
  Scene scene;
  check(mg_scene_create(p, scene.out()));
  for (const auto& layer : layers) {
    if (layer == "candidates") {
      check(mg_scene_add_instance(scene, f));
    } else if (layer == "query") {
      const auto q = query_of({}, f);
      check(mg_scene_set_query(scene, q.first.c_str(), q.second.c_str()));
    } else if (layer == "vp") {
      const auto q = query_of({}, f);
      check(mg_scene_set_query(scene, q.first.c_str(), q.second.c_str()));
      Vp vp;
      check(mg_visibility_polygon(p, q.first.c_str(), q.second.c_str(), vp.out()));
      RegionH r;
      check(mg_vp_region(vp, r.out()));
      check(mg_scene_add_region(scene, "visibility", r, nullptr));
    } else if (layer == "vertices") {
      for (size_t i = 0; i < mg_polygon_size(p); ++i) {
        char *x, *y;
        check(mg_polygon_vertex(p, i, &x, &y));
        const std::string sx = take(x), sy = take(y);
        check(mg_scene_add_marker(scene, sx.c_str(), sy.c_str()));
      }
    } else {
      std::fprintf(stderr, "unknown layer '%s'\n", layer.c_str());
      return MG_ERR_INVALID_ARGUMENT;
    }
  }
  char* svg = nullptr;
  check(mg_scene_render(scene, &svg));
  emit(output, take(svg));
  return 0;
}

int cmd_gen_random(const std::string& shape, size_t n, uint64_t seed, bool with_query,
                   const std::string& output) {
  Polygon p;
  check(mg_random_polygon(shape.c_str(), n, seed, p.out()));
  std::ostringstream text;
  text << "mgv1\npolygon:\n";
  for (size_t i = 0; i < mg_polygon_size(p); ++i) {
    char *x, *y;
    check(mg_polygon_vertex(p, i, &x, &y));
    text << point_text(x, y) << "\n";
  }
  if (with_query) {
    char *x, *y;
    check(mg_random_interior_point(p, seed, &x, &y));
    text << "query:\n" << point_text(x, y) << "\n";
  }
  Instance f;
  check(mg_instance_parse(text.str().c_str(), f.out()));
  char* out = nullptr;
  check(mg_instance_print(f, &out));
  emit(output, take(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visibility with reflections in simple polygons"};
  app.require_subcommand(1);

  std::string input, output, svg, kind = "diffuse", edges = "all", mode = "greedy";
  std::string values, shape = "star";
  std::vector<std::string> q, layers;
  int bounces = 1;
  long target = 0;
  size_t n = 10;
  uint64_t seed = 1;
  bool solve = false, with_query = false;

  auto* vp = app.add_subcommand("vp", "Visibility polygon of a query point");
  vp->add_option("input", input, "Instance file")->required();
  vp->add_option("--q", q, "Query point x y (default: file query)")->expected(2);
  vp->add_option("-o,--output", output, "Report file (default stdout)");
  vp->add_option("--svg", svg, "Write an SVG rendering");

  auto* ext = app.add_subcommand("extend", "Area added by reflecting edges");
  ext->add_option("input", input, "Instance file")->required();
  ext->add_option("--q", q, "Query point x y (default: file query)")->expected(2);
  ext->add_option("--edges", edges, "Comma-separated edge indices or 'all'");
  ext->add_option("--kind", kind, "diffuse or specular")
      ->check(CLI::IsMember({"diffuse", "specular"}));
  ext->add_option("--bounces", bounces, "Number of reflections")->check(CLI::NonNegativeNumber);
  ext->add_option("-o,--output", output, "Report file (default stdout)");
  ext->add_option("--svg", svg, "Write an SVG rendering");

  auto* guard = app.add_subcommand("guard", "Vertex guards with reflections");
  guard->add_option("input", input, "Instance file")->required();
  guard->add_option("--bounces", bounces, "Number of diffuse reflections")
      ->check(CLI::NonNegativeNumber);
  guard->add_option("--mode", mode, "greedy, optimal or reduce")
      ->check(CLI::IsMember({"greedy", "optimal", "reduce"}));
  guard->add_option("-o,--output", output, "Report file (default stdout)");

  auto* red = app.add_subcommand("reduce-gen", "Polygon instance from a Subset-Sum instance");
  std::string red_kind = "specular";
  red->add_option("--kind", red_kind, "specular, diffuse or diffuse-multi")
      ->check(CLI::IsMember({"specular", "diffuse", "diffuse-multi"}));
  red->add_option("--values", values, "Comma-separated positive integers")->required();
  red->add_option("--target", target, "Target sum")->required();
  red->add_option("-o,--output", output, "Instance file (default stdout)");
  red->add_flag("--solve", solve, "Also solve by enumerating mirror subsets");

  auto* ver = app.add_subcommand("verify", "Re-check a reduction instance file");
  ver->add_option("input", input, "Instance file")->required();

  auto* ren = app.add_subcommand("render", "SVG rendering of an instance file");
  ren->add_option("input", input, "Instance file")->required();
  ren->add_option("--layers", layers, "Any of: query, vp, candidates, vertices")->delimiter(',');
  ren->add_option("-o,--output", output, "SVG file (default stdout)");

  auto* gen = app.add_subcommand("gen-random", "Random test polygon as an instance file");
  gen->add_option("--shape", shape, "star, funnel, comb or staircase")
      ->check(CLI::IsMember({"star", "funnel", "comb", "staircase"}));
  gen->add_option("--n", n, "Vertex count (teeth or steps for comb and staircase)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_flag("--query", with_query, "Add a random interior query point");
  gen->add_option("-o,--output", output, "Instance file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : MG_ERR_INVALID_ARGUMENT;
  }

  try {
    if (*vp) return cmd_vp(input, q, output, svg);
    if (*ext) return cmd_extend(input, q, edges, kind, bounces, output, svg);
    if (*guard) return cmd_guard(input, bounces, mode, output);
    if (*red) return cmd_reduce_gen(red_kind, values, target, output, solve);
    if (*ver) return cmd_verify(input);
    if (*ren) return cmd_render(input, layers, output);
    if (*gen) return cmd_gen_random(shape, n, seed, with_query, output);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s: %s\n", mg_status_name(f.status), mg_last_error());
    return static_cast<int>(f.status);
  }
  return 0;
}
