#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "homflow/classes.hpp"
#include "homflow/structure.hpp"

namespace homflow {

// Structure interchange document:
//   signature:     [{name, arity, symmetric}]
//   size:          integer
//   relations:     {symbol -> [[i, ...], ...]}, one tuple per symmetric orbit
//   partial_order: optional [[a, b], ...]
//   linear_order:  optional [all elements in increasing order]
nlohmann::json structure_to_json(const FinStructure& a);
FinStructure structure_from_json(const nlohmann::json& doc);

std::string structure_to_string(const FinStructure& a);
FinStructure structure_from_string(const std::string& text);
FinStructure load_structure(const std::string& path);
void save_structure(const std::string& path, const FinStructure& a);

// CLI class flags: "graph", "kn-free:4", "hypergraph:<sigfile>",
// "a-free:<file>", "poset"; ordered is a separate toggle.
ClassSpec class_from_flag(const std::string& flag, bool ordered);

}  // namespace homflow
