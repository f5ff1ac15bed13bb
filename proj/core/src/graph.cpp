#include "modlex/graph.hpp"

#include <algorithm>
#include <deque>

#include "modlex/errors.hpp"

namespace modlex {

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g;
  g.rows_.assign(order, VertexSet(order));
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an id outside 0.." +
                              (order == 0 ? std::string("(none)") : std::to_string(order - 1)));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (g.rows_[u].contains(v)) continue;
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw PreconditionError("label count " + std::to_string(labels.size()) +
                            " does not match order " + std::to_string(order()));
  }
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

Graph build_graph(std::size_t order, std::span<const Edge> edges) {
  return Graph::from_edges(order, edges);
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw PreconditionError("bfs source out of range");
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

DistanceMatrix distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) d.at(s, t) = row[t];
  }
  return d;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(s);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next -= comp;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Distance diameter(const Graph& g) {
  Distance best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Distance d : bfs_distances(g, s)) {
      if (d == kUnreachable) return kUnreachable;
      best = std::max(best, d);
    }
  }
  return best;
}

InducedSubgraph induced(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.order()) {
    throw PreconditionError("vertex subset universe does not match host order");
  }
  InducedSubgraph out;
  out.to_host = subset.members();
  std::vector<Vertex> to_local(g.order(), kUnreachable);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    to_local[out.to_host[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (to_local[u] != kUnreachable && to_local[v] != kUnreachable) {
      edges.emplace_back(to_local[u], to_local[v]);
    }
  }
  out.graph = Graph::from_edges(out.to_host.size(), edges);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex h : out.to_host) labels.push_back(g.labels()[h]);
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return g.neighbors(v);
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& set) {
  if (set.universe() != g.order()) {
    throw PreconditionError("vertex subset universe does not match host order");
  }
  VertexSet out(g.order());
  set.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out - set;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges).with_labels(g.labels());
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw PreconditionError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

}  // namespace modlex
