#pragma once

#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vspace/enumeration.hpp"
#include "vspace/hypercube.hpp"
#include "vspace/miniball.hpp"
#include "vspace/operator_table.hpp"

namespace vspace {

// File formats (UTF-8 JSON):
//
//   operator:  { "ground": [...], "kind": "tau"|"violator",
//                "default": "identity"|"complement"|"none",
//                "map": [ {"set": [...], "image": [...]}, ... ] }
//   partition: { "ground": [...], "intervals": [ {"lower": [...], "upper": [...]}, ... ] }
//   points:    { "dim": 1|2, "points": [ {"label": "a", "coords": ["3/2", "0"]}, ... ] }
//
// An absent "default" means the kind's natural rule (identity for tau,
// complement for V); "none" requires every subset to be listed.
//
// All loaders throw ParseError with a message naming the offending entry.

OperatorTable load_operator(std::istream& in);
OperatorTable load_operator_text(const std::string& text);
OperatorTable load_operator_file(const std::string& path);

/// Writes the kind's natural default ("identity" for tau, "complement" for
/// V) and lists only the entries that differ from it, canonically ordered.
std::string save_operator(const OperatorTable& op);

/// Partition file contents before the disjoint-cover check.
struct RawPartition {
    GroundSet ground;
    std::vector<Interval> intervals;
};
RawPartition read_partition_text(const std::string& text);

IntervalPartition load_partition_text(const std::string& text);
IntervalPartition load_partition_file(const std::string& path);
std::string save_partition(const IntervalPartition& p);

PointConfig load_points_text(const std::string& text);
PointConfig load_points_file(const std::string& path);

/// Structured forms used by the CLI's --format structured output.
nlohmann::ordered_json to_json(const AxiomReport& report, const OperatorTable& op);
nlohmann::ordered_json to_json(const SweepReport& report);
nlohmann::ordered_json witness_to_json(const Witness& w, const OperatorTable& op);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace vspace
