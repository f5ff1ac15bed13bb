#include "modlex/products.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "modlex/errors.hpp"

namespace modlex {

GraphFamily::GraphFamily(Graph base, std::vector<Graph> components)
    : base_(std::move(base)), components_(std::move(components)) {
  if (components_.size() != base_.order()) {
    throw PreconditionError("graph family needs one component per base vertex (" +
                            std::to_string(base_.order()) + "), got " +
                            std::to_string(components_.size()));
  }
  for (std::size_t v = 0; v < components_.size(); ++v) {
    if (components_[v].order() == 0) {
      throw PreconditionError("component graph of base vertex " + std::to_string(v) +
                              " is empty");
    }
  }
}

GraphFamily GraphFamily::constant(Graph base, const Graph& component) {
  std::vector<Graph> components(base.order(), component);
  return GraphFamily(std::move(base), std::move(components));
}

std::vector<std::size_t> GraphFamily::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(components_.size());
  for (const auto& h : components_) out.push_back(h.order());
  return out;
}

std::size_t GraphFamily::total_order() const {
  std::size_t total = 0;
  for (const auto& h : components_) total += h.order();
  return total;
}

Vertex ProductGraph::id_of(Vertex outer, Vertex inner) const {
  if (outer + 1 >= offsets.size() || offsets[outer] + inner >= offsets[outer + 1]) {
    throw PreconditionError("product vertex (" + std::to_string(outer) + "," +
                            std::to_string(inner) + ") does not exist");
  }
  return static_cast<Vertex>(offsets[outer] + inner);
}

VertexSet ProductGraph::block(Vertex outer) const {
  if (outer + 1 >= offsets.size()) throw PreconditionError("outer vertex out of range");
  VertexSet out(graph.order());
  for (std::size_t id = offsets[outer]; id < offsets[outer + 1]; ++id) {
    out.insert(static_cast<Vertex>(id));
  }
  return out;
}

ProductGraph generalized_lex_product(const GraphFamily& family, BaseConnectivity connectivity) {
  const Graph& base = family.base();
  if (connectivity == BaseConnectivity::kRequireConnected && !is_connected(base)) {
    throw PreconditionError("generalized lexicographic product requires a connected base");
  }
  ProductGraph p;
  p.kind = ProductKind::kLexicographic;
  p.offsets.push_back(0);
  for (Vertex u = 0; u < base.order(); ++u) {
    for (Vertex x = 0; x < family.component(u).order(); ++x) p.vertex_map.push_back({u, x});
    p.offsets.push_back(p.vertex_map.size());
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < base.order(); ++u) {
    for (auto [x, y] : family.component(u).edges()) {
      edges.emplace_back(p.offsets[u] + x, p.offsets[u] + y);
    }
  }
  for (auto [u, v] : base.edges()) {
    for (std::size_t a = p.offsets[u]; a < p.offsets[u + 1]; ++a) {
      for (std::size_t b = p.offsets[v]; b < p.offsets[v + 1]; ++b) {
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
  }
  p.graph = Graph::from_edges(p.vertex_map.size(), edges);

  std::vector<std::string> labels;
  for (auto [u, x] : p.vertex_map) {
    labels.push_back("(" + base.label(u) + "," + family.component(u).label(x) + ")");
  }
  p.graph = p.graph.with_labels(std::move(labels));
  return p;
}

ProductGraph lex_product(const Graph& g, const Graph& h) {
  return generalized_lex_product(GraphFamily::constant(g, h));
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  ProductGraph p;
  p.kind = ProductKind::kCartesian;
  const std::size_t m = h.order();
  p.offsets.push_back(0);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < m; ++b) p.vertex_map.push_back({a, b});
    p.offsets.push_back(p.vertex_map.size());
  }
  auto id = [m](Vertex a, Vertex b) { return static_cast<Vertex>(a * m + b); };
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (auto [x, y] : h.edges()) edges.emplace_back(id(a, x), id(a, y));
  }
  for (auto [a, b] : g.edges()) {
    for (Vertex x = 0; x < m; ++x) edges.emplace_back(id(a, x), id(b, x));
  }
  p.graph = Graph::from_edges(p.vertex_map.size(), edges);
  std::vector<std::string> labels;
  for (auto [a, b] : p.vertex_map) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  p.graph = p.graph.with_labels(std::move(labels));
  return p;
}

VertexSet project_pi(const ProductGraph& product, const VertexSet& subset) {
  if (product.kind != ProductKind::kLexicographic) {
    throw PreconditionError("projection is defined for lexicographic products only");
  }
  if (subset.universe() != product.graph.order()) {
    throw PreconditionError("subset universe does not match product order");
  }
  VertexSet out(product.offsets.size() - 1);
  subset.for_each([&](Vertex id) { out.insert(product.vertex_map[id].outer); });
  return out;
}

Distance lex_distance(const GraphFamily& family, ProductVertex a, ProductVertex b) {
  const Graph& base = family.base();
  if (base.order() < 2) throw PreconditionError("lex_distance needs a base with >= 2 vertices");
  if (a.outer >= base.order() || b.outer >= base.order() ||
      a.inner >= family.component(a.outer).order() ||
      b.inner >= family.component(b.outer).order()) {
    throw PreconditionError("lex_distance: vertex out of range");
  }
  if (a.outer != b.outer) {
    const Distance d = bfs_distances(base, a.outer)[b.outer];
    if (d == kUnreachable) throw PreconditionError("lex_distance requires a connected base");
    return d;
  }
  if (a.inner == b.inner) return 0;
  return family.component(a.outer).adjacent(a.inner, b.inner) ? 1 : 2;
}

}  // namespace modlex
