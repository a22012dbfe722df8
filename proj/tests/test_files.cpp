#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mg/error.hpp"
#include "mg/instance_file.hpp"
#include "mg/random_polygons.hpp"
#include "mg/svg.hpp"
#include "mg/visibility.hpp"

using namespace mg;
using th::P;

TEST_CASE("parse a hand-written file") {
  const char* text =
      "mgv1\n"
      "# unit square\n"
      "polygon:\n"
      "0 0\n1 0\n1/1 1\n0 2/2\n"
      "\n"
      "query:\n1/2 1/2\n"
      "expect:\n"
      "area 1/1\n"
      "note two words\n";
  const InstanceFile f = parse_instance(text);
  CHECK(f.polygon == th::unit_square());
  REQUIRE(f.query.has_value());
  CHECK(*f.query == th::Q(1, 2, 1, 2));
  CHECK(f.expected("area") == "1/1");
  CHECK(f.expected("note") == "two words");
  CHECK_FALSE(f.expected("missing").has_value());
  CHECK(parse_instance(print_instance(f)) == f);
}

TEST_CASE("parse errors") {
  auto code = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Ok;
  };
  CHECK(code("polygon:\n0 0\n1 0\n0 1\n") == ErrorCode::ParseError);
  CHECK(code("mgv2\npolygon:\n0 0\n1 0\n0 1\n") == ErrorCode::ParseError);
  CHECK(code("mgv1\npolygon:\n0 0\n1 0\n") == ErrorCode::ParseError);
  CHECK(code("mgv1\npolygon:\n0 0\n1 x\n0 1\n") == ErrorCode::ParseError);
  CHECK(code("mgv1\npolygon:\n0 0\n1 0 3\n0 1\n") == ErrorCode::ParseError);
  CHECK(code("mgv1\n0 0\n") == ErrorCode::ParseError);
  CHECK(code("mgv1\npolygon:\n0 0\n2 2\n2 0\n0 2\n") == ErrorCode::NotSimple);
  CHECK(code("mgv1\npolygon:\n0 0\n1 0\n0 1\ncandidates:\nmain 0\n") == ErrorCode::ParseError);
  CHECK(code("mgv1\npolygon:\n0 0\n1 0\n0 1\ncandidates:\nkind specular\nmain 7\n") ==
        ErrorCode::ParseError);
  // Candidate labels must refer to the ring as written.
  CHECK(code("mgv1\npolygon:\n0 0\n0 1\n1 0\ncandidates:\nkind specular\nmain 0\n") ==
        ErrorCode::ParseError);
  CHECK(code("mgv1\npolygon:\n0 0\n1 0\n0 1\ncandidates:\nkind specular\nbogus 1\n") ==
        ErrorCode::ParseError);
}

TEST_CASE("round trip of random polygons") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    InstanceFile f;
    f.polygon = random_polygon(static_cast<RandomShape>(seed % 4), 4 + seed % 6, seed);
    f.query = random_interior_points(f.polygon, 1, seed).front();
    f.expect.emplace_back("area", to_wire(polygon_area(f.polygon)));
    const std::string text = print_instance(f);
    const InstanceFile g = parse_instance(text);
    CHECK(g == f);
    CHECK(print_instance(g) == text);
  }
}

TEST_CASE("round trip of reduction instances") {
  for (const auto kind : {0, 1, 2}) {
    const SubsetSumInstance ss{{2, 3, 1}, 4};
    const ReductionInstance ri = kind == 0 ? gen_specular(ss) : gen_diffuse(ss, kind == 2);
    const VerificationReport rep = verify_instance(ri);
    const InstanceFile f = to_instance_file(ri, &rep);
    const InstanceFile g = parse_instance(print_instance(f));
    CHECK(g == f);
    CHECK(g.expected("verified") == "true");
    const ReductionInstance back = reduction_from_file(g);
    CHECK(back.polygon == ri.polygon);
    CHECK(back.candidates.main == ri.candidates.main);
    CHECK(back.candidates.second == ri.candidates.second);
    CHECK(back.candidates.base == ri.candidates.base);
    CHECK(back.source.values == ri.source.values);
    CHECK(back.k == ri.k);
    CHECK(back.spikes == ri.spikes);
    CHECK(back.kind == ri.kind);
    CHECK(verify_instance(back).ok());
  }
}

TEST_CASE("file io") {
  InstanceFile f;
  f.polygon = th::l_shape();
  const std::string path = "files_test_tmp.mg";
  write_instance_file(path, f);
  CHECK(read_instance_file(path) == f);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_instance_file("definitely/missing.mg"), Error);
}

TEST_CASE("svg output") {
  SvgScene s;
  s.polygon = th::l_shape();
  const std::string outline = render_svg(s);
  CHECK(outline.find("<svg") != std::string::npos);
  CHECK(outline.find("</svg>") != std::string::npos);
  CHECK(outline.find("<g") == std::string::npos);
  CHECK(outline.find("viewBox") != std::string::npos);
  // y is flipped: the vertex (0,2) is drawn at -2.
  CHECK(outline.find("L0,-2") != std::string::npos);

  s.query = th::Q(1, 3, 1, 3);
  s.regions.push_back({"visibility", visibility_polygon(s.polygon, *s.query).region, ""});
  s.segments.push_back({"mirror", {s.polygon.edge(0)}, "#ff0000"});
  s.markers.push_back(P(1, 1));
  const std::string a = render_svg(s), b = render_svg(s);
  CHECK(a == b);
  CHECK(a.find("id=\"visibility\"") != std::string::npos);
  CHECK(a.find("id=\"mirror\"") != std::string::npos);
  CHECK(a.find("id=\"query\"") != std::string::npos);
  CHECK(a.find("0.333333333333") != std::string::npos);
  CHECK(a.find("0.3333333333333") == std::string::npos);
  std::size_t open = 0, close = 0;
  for (std::size_t i = a.find('<'); i != std::string::npos; i = a.find('<', i + 1)) ++open;
  for (std::size_t i = a.find('>'); i != std::string::npos; i = a.find('>', i + 1)) ++close;
  CHECK(open == close);
}
