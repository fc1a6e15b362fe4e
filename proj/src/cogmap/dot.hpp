#pragma once

#include <string>

#include "cogmap/concepts.hpp"

namespace cogmap {

/// Render a validated matrix as a Graphviz digraph: one node per concept,
/// one edge per nonzero entry, I-weighted edges dashed.  Node and edge
/// order follow the spaces, so output is deterministic.
std::string export_dot(const ConnectionMatrix& m, const std::string& name = "map");

}  // namespace cogmap
