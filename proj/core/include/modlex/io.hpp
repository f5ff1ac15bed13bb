#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modlex/graph.hpp"
#include "modlex/modular.hpp"
#include "modlex/products.hpp"

namespace modlex {

/// Edge-list text format:
///
///     # comment lines start with '#'
///     n 5          optional header, must precede the first edge
///     0 1          one edge per line, 0-based ids separated by whitespace
///
/// Without a header the order is one more than the largest id mentioned.
struct ParsedEdgeList {
  Graph graph;
  /// Non-fatal findings, e.g. duplicate edges that were collapsed.
  std::vector<std::string> warnings;
};

/// Throws ParseError (with a 1-based line number) on malformed lines,
/// self-loops and ids outside a declared order.
ParsedEdgeList parse_edge_list(std::string_view text);

/// Canonical form: header line, then edges "u v" with u < v in sorted order.
std::string emit_edge_list(const Graph& g);

struct DotOptions {
  std::string name = "G";
  /// Rendered as one filled cluster per part.
  std::optional<std::vector<VertexSet>> clusters;
};

std::string emit_dot(const Graph& g, const DotOptions& options = {});
/// Quotient vertices are labeled with the members of their part.
std::string emit_dot(const QuotientGraph& q, const DotOptions& options = {});
/// Product vertices are labeled "(u,x)"; lexicographic products get one
/// cluster per block unless clusters are given explicitly.
std::string emit_dot(const ProductGraph& p, const DotOptions& options = {});

/// 64-bit FNV-1a of the canonical edge-list text.
std::uint64_t edge_list_checksum(const Graph& g);

}  // namespace modlex
