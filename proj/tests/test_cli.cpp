#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + MG_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) { return std::string(MG_TEST_DIR) + "/" + name; }

std::string write(const std::string& name, const std::string& text) {
  const std::string path = tmp(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string line_value(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  return "";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::string kSquare = "mgv1\npolygon:\n0 0\n1 0\n1 1\n0 1\n";
const std::string kL = "mgv1\npolygon:\n0 0\n2 0\n2 1\n1 1\n1 2\n0 2\n";

}  // namespace

TEST_CASE("vp") {
  const auto sq = write("square.mg", kSquare);
  auto r = run("vp " + sq + " --q 1/2 1/2");
  CHECK(r.code == 0);
  CHECK(line_value(r.out, "area") == "1/1");
  CHECK(line_value(r.out, "windows") == "0");

  const auto l = write("l.mg", kL + "query:\n1/2 3/2\n");
  r = run("vp " + l);
  CHECK(line_value(r.out, "area") == "5/2");
  CHECK(line_value(r.out, "windows") == "1");
  // Star-shaped from the corner square.
  CHECK(line_value(run("vp " + l + " --q 1/4 1/4").out, "area") == "3/1");

  const auto svg = tmp("vp.svg");
  CHECK(run("vp " + l + " --svg " + svg).code == 0);
  CHECK(slurp(svg).find("</svg>") != std::string::npos);

  CHECK(run("vp " + l + " --q 3 3").code == 3);
  CHECK(run("vp " + write("bad.mg", "mgv1\npolygon:\n0 0\n1 q\n0 1\n")).code == 2);
  CHECK(run("vp " + tmp("missing.mg")).code == 2);
}

TEST_CASE("funnel kernel") {
  const auto f = write("funnel.mg", "mgv1\npolygon:\n0 0\n6 0\n4 2\n3 5\n2 2\n");
  auto r = run("vp " + f + " --q 3 0");
  CHECK(line_value(r.out, "area") == "11/1");
  r = run("extend " + f + " --q 3 1 --edges 0 --kind diffuse --bounces 1");
  CHECK(r.code == 0);
  CHECK(line_value(r.out, "visible") == "11/1");
}

TEST_CASE("extend") {
  const auto sq = write("square2.mg", kSquare + "query:\n1/2 1/4\n");
  auto r = run("extend " + sq + " --edges 2 --kind specular --bounces 1");
  CHECK(r.code == 0);
  CHECK(line_value(r.out, "added") == "0/1");
  const auto l = write("l2.mg", kL + "query:\n7/4 1/2\n");
  r = run("extend " + l + " --edges 5 --kind specular --bounces 1 --svg " + tmp("ext.svg"));
  CHECK(line_value(r.out, "added") == "7/12");
  CHECK(r.out.find("lit edge 5 depth 0") != std::string::npos);
  CHECK(run("extend " + l + " --kind specular --bounces 2").code == 4);
  CHECK(run("extend " + l + " --kind diffuse --bounces 2", "MG_BIT_CAP=4").code == 5);
  CHECK(run("extend " + l + " --edges 1,x").code == 1);
}

TEST_CASE("guard") {
  const auto sq = write("square3.mg", kSquare);
  CHECK(line_value(run("guard " + sq + " --bounces 0").out, "guards") == "1");
  CHECK(run("gen-random --shape comb --n 3 --seed 4 -o " + tmp("comb3.mg")).code == 0);
  const auto g = run("guard " + tmp("comb3.mg") + " --bounces 0 --mode greedy");
  CHECK(line_value(g.out, "guards") == "3");
  const auto o = run("guard " + tmp("comb3.mg") + " --bounces 0 --mode optimal");
  CHECK(line_value(o.out, "guards") == "3");
  CHECK(run("gen-random --shape comb --n 4 --seed 1 -o " + tmp("comb4.mg")).code == 0);
  const auto r = run("guard " + tmp("comb4.mg") + " --bounces 4 --mode reduce");
  CHECK(r.code == 0);
  CHECK(line_value(r.out, "start") == "4");
  CHECK(line_value(r.out, "bound") == "2");
  CHECK(line_value(r.out, "within_bound") == "true");
  CHECK(run("gen-random --shape star --n 17 --seed 1 -o " + tmp("big.mg")).code == 0);
  CHECK(run("guard " + tmp("big.mg") + " --mode optimal --bounces 0").code == 11);
}

TEST_CASE("reduce-gen and verify") {
  const auto s = tmp("spec.mg");
  CHECK(run("reduce-gen --kind specular --values 1,2,3 --target 3 -o " + s + " --solve").code == 0);
  const std::string file = slurp(s);
  CHECK(file.rfind("mgv1\n", 0) == 0);
  CHECK(line_value(file, "verified") == "true");
  CHECK(run("verify " + s).code == 0);

  const auto d = tmp("diff.mg");
  const auto r = run("reduce-gen --kind diffuse --values 2,3 --target 5 -o " + d + " --solve");
  CHECK(r.code == 0);
  CHECK(r.out.find("solvable true subset 0 1") != std::string::npos);
  const std::string df = slurp(d);
  CHECK(line_value(df, "added_0") == "2/1");
  CHECK(line_value(df, "added_1") == "3/1");

  CHECK(run("reduce-gen --kind specular --values 0 --target 1").code == 16);

  // Shift the first mirror edge right by 1/4 and re-verify.
  std::string tampered = file;
  const std::size_t main_at = tampered.find("\nmain ");
  REQUIRE(main_at != std::string::npos);
  const std::size_t e = std::stoul(tampered.substr(main_at + 6));
  std::istringstream in(file);
  std::ostringstream out;
  std::string line;
  std::size_t vertex = 0;
  bool in_poly = false;
  while (std::getline(in, line)) {
    if (line == "polygon:") { in_poly = true; out << line << "\n"; continue; }
    if (line.back() == ':') in_poly = false;
    if (in_poly) {
      if (vertex == e || vertex == e + 1) {
        std::istringstream ls(line);
        std::string x, y;
        ls >> x >> y;
        const std::size_t slash = x.find('/');
        const long num = std::stol(x.substr(0, slash)), den = std::stol(x.substr(slash + 1));
        line = std::to_string(4 * num + den) + "/" + std::to_string(4 * den) + " " + y;
      }
      ++vertex;
    }
    out << line << "\n";
  }
  CHECK(run("verify " + write("tampered.mg", out.str())).code == 6);
}

TEST_CASE("render") {
  const auto d = tmp("render.mg");
  REQUIRE(run("reduce-gen --kind diffuse --values 2,3 --target 5 -o " + d).code == 0);
  const auto a = run("render " + d + " --layers candidates,vp");
  const auto b = run("render " + d + " --layers candidates,vp");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("id=\"spikes\"") != std::string::npos);
  CHECK(a.out.find("id=\"main\"") != std::string::npos);
  CHECK(a.out.find("id=\"second\"") != std::string::npos);
  // Regression checksum of the rendered double-triangle gadgets.
  CHECK(fnv1a(a.out) == 11662566478921906539ULL);
  const auto bare = run("render " + d);
  CHECK(bare.code == 0);
  CHECK(bare.out.find("<g") == std::string::npos);
  CHECK(bare.out.find("id=\"outline\"") != std::string::npos);
  CHECK(run("render " + d + " --layers nonsense").code == 1);
}

TEST_CASE("gen-random is deterministic") {
  const auto a = run("gen-random --shape funnel --n 8 --seed 5 --query");
  const auto b = run("gen-random --shape funnel --n 8 --seed 5 --query");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("query:") != std::string::npos);
  CHECK(run("gen-random --shape nope").code == 1);
}
