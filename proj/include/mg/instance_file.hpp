#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mg/geom.hpp"
#include "mg/redgen.hpp"

namespace mg {

struct CandidateAnnotations {
  std::string kind;  // "specular", "diffuse" or "diffuse-multi"
  std::vector<std::size_t> main;
  std::vector<std::optional<std::size_t>> second;
  std::optional<std::size_t> base;
  std::vector<std::vector<Point>> spikes;

  friend bool operator==(const CandidateAnnotations&, const CandidateAnnotations&) = default;
};

/// Line-oriented text file with a versioned header:
///
///   mgv1
///   polygon:
///   <x> <y>            one vertex per line
///   query:
///   <x> <y>
///   candidates:
///   kind <name>
///   main <i> ...
///   second <i|-> ...
///   base <i|->
///   spike <x> <y> ...  one hidden region per line
///   expect:
///   <key> <value>      value is the rest of the line
///
/// Only `polygon:` is required. Blank lines and lines starting with '#' are
/// ignored. Rationals are written as "p/q"; integers are accepted on input.
struct InstanceFile {
  SimplePolygon polygon;
  std::optional<Point> query;
  std::optional<CandidateAnnotations> candidates;
  std::vector<std::pair<std::string, std::string>> expect;

  /// First value stored under `key`, if any.
  std::optional<std::string> expected(const std::string& key) const;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws Error(ParseError) with a line number, or Error(NotSimple).
InstanceFile parse_instance(std::string_view text);
std::string print_instance(const InstanceFile& file);

InstanceFile read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const InstanceFile& file);

/// Embeds the labels, spikes, source values and the verification report.
InstanceFile to_instance_file(const ReductionInstance& ri, const VerificationReport* report);
/// Requires a candidates block plus `values` and `k` entries in `expect`.
ReductionInstance reduction_from_file(const InstanceFile& file);

}  // namespace mg
