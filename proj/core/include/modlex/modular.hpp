#pragma once

#include <cstddef>
#include <vector>

#include "modlex/graph.hpp"
#include "modlex/products.hpp"

namespace modlex {

/// A vertex set H is a module when every vertex outside H is adjacent to all
/// of H or to none of it. Throws PreconditionError for an empty set.
bool is_module(const Graph& g, const VertexSet& s);

/// True iff s is a proper module contained in no larger proper module.
bool is_maximal_module(const Graph& g, const VertexSet& s);

/// Least module containing `seed`: keeps absorbing outside vertices that see
/// some but not all of the current set.
VertexSet smallest_module_containing(const Graph& g, const VertexSet& seed);

/// Disjoint modules covering the host, ordered by least member.
struct ModularPartition {
  std::size_t host_order = 0;
  std::vector<VertexSet> parts;
  /// Set when the host's complement is disconnected: the partition is then a
  /// canonical two-module split rather than the (non-unique) maximal one.
  bool k2_case = false;

  /// Validates that the parts are disjoint modules covering g and sorts them.
  static ModularPartition from_parts(const Graph& g, std::vector<VertexSet> parts);

  std::vector<std::size_t> part_index() const;
};

/// Top-level partition whose quotient is the minimal quotient graph.
///
/// When the complement of g is connected this is the unique partition into
/// maximal modules. Otherwise, with co-components C1..Ck ordered by least
/// vertex, the split (C1, C2 u ... u Ck) is returned and k2_case is set.
/// Requires g connected with at least two vertices.
ModularPartition maximal_modular_partition(const Graph& g);

struct QuotientGraph {
  Graph graph;
  /// parts[i] is the module collapsed into quotient vertex i.
  std::vector<VertexSet> parts;
  std::vector<std::size_t> part_of;
};

/// One vertex per part; two parts are joined iff they are adjacent in g.
/// Throws PreconditionError if some part is not a module.
QuotientGraph quotient(const Graph& g, const ModularPartition& partition);

QuotientGraph minimal_quotient(const Graph& g);

/// True iff K2 is a quotient of g, i.e. the complement of g is disconnected.
bool has_k2_quotient(const Graph& g);

/// Family (quotient, induced parts) whose generalized lexicographic product is
/// isomorphic to g via `part_members`.
struct Decomposition {
  GraphFamily family;
  /// part_members[v][x] is the host vertex standing for product vertex (v,x).
  std::vector<std::vector<Vertex>> part_members;
};

Decomposition decompose(const Graph& g, const QuotientGraph& q);

}  // namespace modlex
