#pragma once

#include <string>

#include <json.hpp>

#include "binfair/generators.hpp"
#include "binfair/instance.hpp"
#include "binfair/nsw_alg.hpp"

namespace binfair {

// Wire formats
//   valuation  {"type":"xos_family","sets":[[0,1],[2]]}
//              {"type":"spectrum","delta":3}
//              {"type":"subadditive_pq","p":2,"q":5}
//              {"type":"planted_subadditive","p":2,"q":5,"t":[0,1,2]}
//   instance   {"n":2,"m":3,"valuations":[...]}
//   allocation {"bundles":[[0],[1,2]],"unassigned_policy":"max_bundle"}
//   graph      {"vertices":4,"edges":[[0,1],...]}
// All indices are 0-based.

nlohmann::json valuation_to_json(const ValuationSpec& spec);
ValuationSpec valuation_from_json(const nlohmann::json& j, std::size_t num_goods);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const nlohmann::json& j, std::size_t num_agents,
                                std::size_t num_goods);

nlohmann::json graph_to_json(const CubicGraph& graph);
CubicGraph graph_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const SolveTrace& trace);
SolveTrace trace_from_json(const nlohmann::json& j);

/// Parse with schema errors mapped to parse_error.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// Canonical serialization used for all emitted files (sorted keys, two-space
/// indent, trailing newline) so identical payloads are byte-identical.
std::string dump_json(const nlohmann::json& j);

}  // namespace binfair
