#pragma once

#include <cstddef>
#include <vector>

#include "modlex/graph.hpp"

namespace modlex {

/// One representative per isomorphism class of graphs on n vertices (n <= 8),
/// grown by attaching a new vertex to representatives on n-1 vertices.
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n);

/// The connected members of graphs_up_to_isomorphism(n).
std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n);

}  // namespace modlex
