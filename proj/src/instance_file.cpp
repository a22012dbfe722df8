#include "mg/instance_file.hpp"

#include <fstream>
#include <sstream>

#include "mg/error.hpp"

namespace mg {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Rational rational_at(const std::string& tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const Error& e) {
    parse_fail(line, e.what());
  }
}

std::size_t index_at(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(line, "bad edge index '" + tok + "'");
  return std::stoul(tok);
}

std::optional<std::size_t> optional_index_at(const std::string& tok, std::size_t line) {
  if (tok == "-") return std::nullopt;
  return index_at(tok, line);
}

std::vector<Point> points_from(const std::vector<std::string>& toks, std::size_t first,
                               std::size_t line) {
  if ((toks.size() - first) % 2 != 0) parse_fail(line, "odd number of coordinates");
  std::vector<Point> out;
  for (std::size_t i = first; i < toks.size(); i += 2)
    out.push_back({rational_at(toks[i], line), rational_at(toks[i + 1], line)});
  return out;
}

std::string index_text(const std::optional<std::size_t>& i) {
  return i ? std::to_string(*i) : std::string("-");
}

std::string join_values(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::optional<std::string> InstanceFile::expected(const std::string& key) const {
  for (const auto& [k, v] : expect)
    if (k == key) return v;
  return std::nullopt;
}

InstanceFile parse_instance(std::string_view text) {
  enum class Section { None, Polygon, Query, Candidates, Expect };
  InstanceFile file;
  std::vector<Point> ring;
  Section section = Section::None;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (raw.empty() || raw.front() == '#') continue;
    if (!header) {
      if (raw != "mgv1") parse_fail(line_no, "expected header 'mgv1'");
      header = true;
      continue;
    }
    if (raw == "polygon:") { section = Section::Polygon; continue; }
    if (raw == "query:") { section = Section::Query; continue; }
    if (raw == "candidates:") {
      section = Section::Candidates;
      if (!file.candidates) file.candidates.emplace();
      continue;
    }
    if (raw == "expect:") { section = Section::Expect; continue; }

    const auto toks = split(raw);
    switch (section) {
      case Section::None:
        parse_fail(line_no, "content before any section");
      case Section::Polygon:
        if (toks.size() != 2) parse_fail(line_no, "vertex needs two coordinates");
        ring.push_back({rational_at(toks[0], line_no), rational_at(toks[1], line_no)});
        break;
      case Section::Query:
        if (toks.size() != 2) parse_fail(line_no, "query needs two coordinates");
        if (file.query) parse_fail(line_no, "duplicate query point");
        file.query = Point{rational_at(toks[0], line_no), rational_at(toks[1], line_no)};
        break;
      case Section::Candidates: {
        auto& c = *file.candidates;
        const std::string& key = toks[0];
        if (key == "kind") {
          if (toks.size() != 2) parse_fail(line_no, "kind takes one value");
          c.kind = toks[1];
        } else if (key == "main") {
          for (std::size_t i = 1; i < toks.size(); ++i) c.main.push_back(index_at(toks[i], line_no));
        } else if (key == "second") {
          for (std::size_t i = 1; i < toks.size(); ++i)
            c.second.push_back(optional_index_at(toks[i], line_no));
        } else if (key == "base") {
          if (toks.size() != 2) parse_fail(line_no, "base takes one value");
          c.base = optional_index_at(toks[1], line_no);
        } else if (key == "spike") {
          auto pts = points_from(toks, 1, line_no);
          if (pts.size() < 3) parse_fail(line_no, "spike needs three vertices");
          c.spikes.push_back(std::move(pts));
        } else {
          parse_fail(line_no, "unknown candidates key '" + key + "'");
        }
        break;
      }
      case Section::Expect: {
        const std::size_t cut = raw.find_first_of(" \t");
        const std::string key(raw.substr(0, cut));
        const std::string value = cut == std::string_view::npos ? "" : std::string(trim(raw.substr(cut)));
        file.expect.emplace_back(key, value);
        break;
      }
    }
  }
  if (!header) parse_fail(line_no, "missing header 'mgv1'");
  if (ring.size() < 3) parse_fail(line_no, "polygon needs at least three vertices");
  const std::vector<Point> given = ring;
  file.polygon = SimplePolygon(std::move(ring));
  if (file.candidates && file.polygon.vertices() != given)
    throw Error(ErrorCode::ParseError,
                "candidate edge labels need a counterclockwise ring without repeated or "
                "collinear vertices");
  if (file.candidates && file.candidates->kind.empty())
    throw Error(ErrorCode::ParseError, "candidates block has no kind");
  if (file.candidates)
    for (std::size_t e : file.candidates->main)
      if (e >= file.polygon.size())
        throw Error(ErrorCode::ParseError, "candidate edge " + std::to_string(e) + " out of range");
  return file;
}

std::string print_instance(const InstanceFile& file) {
  std::ostringstream out;
  out << "mgv1\npolygon:\n";
  for (const Point& v : file.polygon.vertices()) out << to_wire(v.x) << ' ' << to_wire(v.y) << '\n';
  if (file.query) out << "query:\n" << to_wire(file.query->x) << ' ' << to_wire(file.query->y) << '\n';
  if (file.candidates) {
    const auto& c = *file.candidates;
    out << "candidates:\nkind " << c.kind << '\n';
    if (!c.main.empty()) {
      out << "main";
      for (std::size_t e : c.main) out << ' ' << e;
      out << '\n';
    }
    if (!c.second.empty()) {
      out << "second";
      for (const auto& e : c.second) out << ' ' << index_text(e);
      out << '\n';
    }
    if (c.base) out << "base " << *c.base << '\n';
    for (const auto& s : c.spikes) {
      out << "spike";
      for (const Point& v : s) out << ' ' << to_wire(v.x) << ' ' << to_wire(v.y);
      out << '\n';
    }
  }
  if (!file.expect.empty()) {
    out << "expect:\n";
    for (const auto& [k, v] : file.expect) out << k << (v.empty() ? "" : " ") << v << '\n';
  }
  return out.str();
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const InstanceFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << print_instance(file);
}

InstanceFile to_instance_file(const ReductionInstance& ri, const VerificationReport* report) {
  InstanceFile f;
  f.polygon = ri.polygon;
  f.query = ri.q;
  CandidateAnnotations c;
  c.kind = reduction_kind_name(ri.kind);
  c.main = ri.candidates.main;
  c.second = ri.candidates.second;
  c.base = ri.candidates.base;
  for (const auto& s : ri.spikes) c.spikes.push_back(s.vertices());
  f.candidates = std::move(c);
  f.expect.emplace_back("values", join_values(ri.source.values));
  f.expect.emplace_back("k", to_wire(ri.k));
  if (report) {
    f.expect.emplace_back("verified", report->ok() ? "true" : "false");
    if (!report->ok()) f.expect.emplace_back("failure", report->failure);
    for (std::size_t i = 0; i < report->added_per_value.size(); ++i)
      f.expect.emplace_back("added_" + std::to_string(i), to_wire(report->added_per_value[i]));
    if (ri.kind != ReductionKind::SpecularSingle)
      f.expect.emplace_back("base_leak", to_wire(report->base_leak));
    f.expect.emplace_back("max_coordinate_bits", std::to_string(report->max_coordinate_bits));
  }
  return f;
}

ReductionInstance reduction_from_file(const InstanceFile& file) {
  if (!file.candidates) throw Error(ErrorCode::InvalidInstance, "file has no candidates block");
  if (!file.query) throw Error(ErrorCode::InvalidInstance, "file has no query point");
  const auto values = file.expected("values");
  const auto k = file.expected("k");
  if (!values || !k) throw Error(ErrorCode::InvalidInstance, "file lacks 'values' or 'k'");
  ReductionInstance ri;
  ri.polygon = file.polygon;
  ri.q = *file.query;
  ri.kind = parse_reduction_kind(file.candidates->kind);
  ri.k = parse_rational(*k);
  for (const auto& tok : split(*values)) {
    try {
      ri.source.values.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad value '" + tok + "'");
    }
  }
  ri.source.target = ri.k.get_den() == 1 ? ri.k.get_num().get_si() : 0;
  ri.candidates.main = file.candidates->main;
  ri.candidates.second = file.candidates->second;
  ri.candidates.second.resize(ri.candidates.main.size());
  ri.candidates.base = file.candidates->base;
  for (const auto& s : file.candidates->spikes) ri.spikes.emplace_back(s);
  return ri;
}

}  // namespace mg
