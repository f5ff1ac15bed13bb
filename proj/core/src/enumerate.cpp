#include "modlex/enumerate.hpp"

#include <algorithm>
#include <map>

#include "modlex/errors.hpp"

namespace modlex {
namespace {

// Cheap isomorphism invariant used to bucket candidates.
std::vector<std::size_t> invariant(const Graph& g) {
  std::vector<std::size_t> degrees, neighbor_sums;
  for (Vertex v = 0; v < g.order(); ++v) {
    degrees.push_back(g.degree(v));
    std::size_t sum = 0;
    g.neighbors(v).for_each([&](Vertex w) { sum += g.degree(w); });
    neighbor_sums.push_back(sum);
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(neighbor_sums.begin(), neighbor_sums.end());
  std::vector<std::size_t> key{g.size()};
  key.insert(key.end(), degrees.begin(), degrees.end());
  key.insert(key.end(), neighbor_sums.begin(), neighbor_sums.end());
  return key;
}

}  // namespace

std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
  if (n > 8) throw PreconditionError("graph enumeration is limited to 8 vertices");
  std::vector<Graph> current{Graph()};
  for (std::size_t order = 1; order <= n; ++order) {
    std::map<std::vector<std::size_t>, std::vector<Graph>> buckets;
    std::vector<Graph> next;
    const IsomorphismOptions options{order};
    const auto fresh = static_cast<Vertex>(order - 1);
    for (const Graph& g : current) {
      std::vector<Edge> base(g.edges().begin(), g.edges().end());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fresh); ++mask) {
        std::vector<Edge> edges = base;
        for (Vertex v = 0; v < fresh; ++v) {
          if ((mask >> v) & 1U) edges.emplace_back(v, fresh);
        }
        Graph candidate = Graph::from_edges(order, edges);
        auto& bucket = buckets[invariant(candidate)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Graph& rep) {
          return are_isomorphic(rep, candidate, options);
        });
        if (!seen) {
          bucket.push_back(candidate);
          next.push_back(std::move(candidate));
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n) {
  auto all = graphs_up_to_isomorphism(n);
  std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
  return all;
}

}  // namespace modlex
