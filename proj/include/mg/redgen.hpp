#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mg/geom.hpp"

namespace mg {

struct SubsetSumInstance {
  std::vector<long> values;
  long target = 0;
};

enum class ReductionKind { SpecularSingle, DiffuseSingle, DiffuseMulti };

const char* reduction_kind_name(ReductionKind kind);
/// Accepts "specular", "diffuse", "diffuse-multi" and the enum names.
ReductionKind parse_reduction_kind(const std::string& text);

struct CandidateEdges {
  std::vector<std::size_t> main;                  // one per value
  std::vector<std::optional<std::size_t>> second;  // one per value
  std::optional<std::size_t> base;
};

struct ReductionInstance {
  SimplePolygon polygon;
  Point q;
  CandidateEdges candidates;
  ReductionKind kind = ReductionKind::SpecularSingle;
  Rational k;
  SubsetSumInstance source;
  std::vector<SimplePolygon> spikes;  // hidden region encoding each value
};

/// Throws InvalidInstance for an empty list or any value < 1.
ReductionInstance gen_specular(const SubsetSumInstance& ss);
ReductionInstance gen_diffuse(const SubsetSumInstance& ss, bool multi = false);

struct VerificationReport {
  bool simple = false;           // (a)
  bool exact = false;            // (b)
  bool exclusive = false;        // (c)
  bool non_candidates_zero = true;  // (d), DiffuseSingle only
  bool direct_ok = false;        // q sees everything except the spikes
  std::vector<Rational> added_per_value;
  std::vector<Rational> spike_area;
  Rational base_leak;            // diffuse: spike area added by the base edge
  std::size_t max_coordinate_bits = 0;
  std::string failure;           // first violated clause, empty when all pass

  bool ok() const { return failure.empty(); }
};

/// Checks every clause. Throws VerificationFailed naming the first violated
/// clause when `strict`; otherwise reports it in `failure`.
VerificationReport verify_instance(const ReductionInstance& ri, bool strict = true);

/// Minimum-cardinality, then lexicographically smallest index set with the
/// target sum. Throws TooLarge for more than 20 values.
std::optional<std::vector<std::size_t>> subset_sum_bruteforce(const SubsetSumInstance& ss);

/// Same search over the geometric areas added by the main edges.
std::optional<std::vector<std::size_t>> solve_by_enumeration(const ReductionInstance& ri);

/// Area added by reflecting off the main edges of the chosen values.
Rational added_area_for(const ReductionInstance& ri, const std::vector<std::size_t>& chosen);

}  // namespace mg
