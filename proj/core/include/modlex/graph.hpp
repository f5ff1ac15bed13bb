#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modlex/vertex_set.hpp"

namespace modlex {

/// Undirected edge; normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple undirected graph on vertex ids 0..order()-1.
///
/// Adjacency is kept twice: as one bitset row per vertex (fast neighborhood
/// intersection for module and isometry tests) and as a sorted edge list.
/// The empty graph (order 0) is a valid value.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on out-of-range ids or self-loops. Duplicate
  /// edges (in either orientation) are collapsed.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);
  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return u < order() && rows_[u].contains(v);
  }
  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Optional display labels; empty when none were attached.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;
  std::string label(Vertex v) const;

  /// Structural equality: same order and same edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexSet> rows_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

Graph build_graph(std::size_t order, std::span<const Edge> edges);

/// Hop count; kUnreachable marks vertex pairs in different components.
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order)
      : order_(order), cells_(order * order, kUnreachable) {}

  std::size_t order() const noexcept { return order_; }
  Distance operator()(Vertex u, Vertex v) const noexcept { return cells_[u * order_ + v]; }
  Distance& at(Vertex u, Vertex v) noexcept { return cells_[u * order_ + v]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Distance> cells_;
};

/// Single-source BFS hop counts.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
/// All-pairs BFS.
DistanceMatrix distances(const Graph& g);

/// The empty graph counts as connected.
bool is_connected(const Graph& g);
/// Connected components, each as a vertex set, ordered by least member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Max finite distance; kUnreachable when disconnected; 0 for K1 and the empty
/// graph.
Distance diameter(const Graph& g);

/// Graph induced on a vertex subset, with dense relabeling. to_host[i] is the
/// host id of induced vertex i (increasing).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

InducedSubgraph induced(const Graph& g, const VertexSet& subset);

VertexSet neighborhood(const Graph& g, Vertex v);
/// Union of neighborhoods of the members, minus the set itself.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& set);

Graph complement(const Graph& g);

/// Graph with vertex i of `g` renamed to perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

struct IsomorphismOptions {
  std::size_t max_order = 10;
};

/// Exhaustive isomorphism test: backtracking over color-refined vertex
/// classes. Throws BudgetExceeded when either graph exceeds max_order.
bool are_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& options = {});

/// Common named graphs.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

}  // namespace modlex
