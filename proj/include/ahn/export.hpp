#pragma once

#include "ahn/compound.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ahn {

/// Undirected Graphviz graph of the chain: carbons left to right, hydrogens
/// attached to their carbon. Labels list one coefficient per feature, first
/// feature on top.
std::string export_dot(const CompoundModel& model);

/// The same graph as {"nodes": [...], "edges": [...]}.
nlohmann::json export_structure(const CompoundModel& model);

}  // namespace ahn
