#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "modlex/graph.hpp"

namespace modlex {

/// A base graph G together with one nonempty component graph H_v per base
/// vertex v.
class GraphFamily {
 public:
  GraphFamily(Graph base, std::vector<Graph> components);

  /// Every base vertex gets a copy of `component`.
  static GraphFamily constant(Graph base, const Graph& component);

  const Graph& base() const noexcept { return base_; }
  const Graph& component(Vertex v) const { return components_.at(v); }
  const std::vector<Graph>& components() const noexcept { return components_; }
  /// |H_v| for every base vertex.
  std::vector<std::size_t> sizes() const;
  std::size_t total_order() const;

 private:
  Graph base_;
  std::vector<Graph> components_;
};

enum class ProductKind { kLexicographic, kCartesian };

/// (base or left-factor vertex, inner or right-factor vertex).
struct ProductVertex {
  Vertex outer = 0;
  Vertex inner = 0;
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Product graph with its vertex correspondence. Product ids enumerate
/// (outer, inner) pairs in lexicographic order.
struct ProductGraph {
  Graph graph;
  ProductKind kind = ProductKind::kLexicographic;
  std::vector<ProductVertex> vertex_map;
  /// offsets[u] is the product id of (u, 0); offsets.back() == order.
  std::vector<std::size_t> offsets;

  Vertex id_of(Vertex outer, Vertex inner) const;
  /// Product ids of {u} x V(H_u), i.e. the block of one outer vertex.
  VertexSet block(Vertex outer) const;
};

enum class BaseConnectivity { kRequireConnected, kAllowDisconnected };

/// G[H]: (u,x)(v,y) is an edge iff uv in E(G), or u = v and xy in E(H_u).
/// By default the base must be connected.
ProductGraph generalized_lex_product(
    const GraphFamily& family,
    BaseConnectivity connectivity = BaseConnectivity::kRequireConnected);

ProductGraph lex_product(const Graph& g, const Graph& h);

/// G box H: (g,h)(g',h') is an edge iff g = g' and hh' in E(H), or h = h' and
/// gg' in E(G).
ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// Base vertices met by a subset of a lexicographic product.
VertexSet project_pi(const ProductGraph& product, const VertexSet& subset);

/// Closed-form distance in G[H] for a connected base with at least two
/// vertices: d_G(u,v) when u != v, otherwise 1 or 2 depending on whether xy
/// is an edge of H_u (0 for identical vertices).
Distance lex_distance(const GraphFamily& family, ProductVertex a, ProductVertex b);

}  // namespace modlex
