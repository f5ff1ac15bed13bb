#include "modlex/modular.hpp"

#include <algorithm>
#include <string>

#include "modlex/errors.hpp"

namespace modlex {
namespace {

void require_host(const Graph& g, const VertexSet& s, const char* op) {
  if (s.universe() != g.order()) {
    throw PreconditionError(std::string(op) + ": subset universe does not match host order");
  }
}

}  // namespace

bool is_module(const Graph& g, const VertexSet& s) {
  require_host(g, s, "is_module");
  if (s.empty()) throw PreconditionError("is_module: empty vertex set");
  const std::size_t k = s.size();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    const std::size_t seen = g.neighbors(v).intersection_size(s);
    if (seen != 0 && seen != k) return false;
  }
  return true;
}

VertexSet smallest_module_containing(const Graph& g, const VertexSet& seed) {
  require_host(g, seed, "smallest_module_containing");
  if (seed.empty()) throw PreconditionError("smallest_module_containing: empty seed");
  VertexSet s = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t k = s.size();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (s.contains(v)) continue;
      const std::size_t seen = g.neighbors(v).intersection_size(s);
      if (seen != 0 && seen != k) {
        s.insert(v);
        ++k;
        grew = true;
      }
    }
  }
  return s;
}

bool is_maximal_module(const Graph& g, const VertexSet& s) {
  if (s.size() == g.order() || !is_module(g, s)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    VertexSet bigger = s;
    bigger.insert(v);
    if (smallest_module_containing(g, bigger).size() != g.order()) return false;
  }
  return true;
}

ModularPartition ModularPartition::from_parts(const Graph& g, std::vector<VertexSet> parts) {
  VertexSet covered(g.order());
  for (const auto& p : parts) {
    require_host(g, p, "modular partition");
    if (p.empty()) throw PreconditionError("modular partition contains an empty part");
    if (covered.intersects(p)) throw PreconditionError("modular partition parts overlap");
    if (!is_module(g, p)) throw PreconditionError("partition part is not a module");
    covered |= p;
  }
  if (covered.size() != g.order()) {
    throw PreconditionError("modular partition does not cover every vertex");
  }
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return *a.first() < *b.first(); });
  return ModularPartition{g.order(), std::move(parts), false};
}

std::vector<std::size_t> ModularPartition::part_index() const {
  std::vector<std::size_t> index(host_order, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i].for_each([&](Vertex v) { index[v] = i; });
  }
  return index;
}

bool has_k2_quotient(const Graph& g) {
  return g.order() >= 2 && !is_connected(complement(g));
}

ModularPartition maximal_modular_partition(const Graph& g) {
  if (g.order() < 2) {
    throw PreconditionError("maximal_modular_partition needs at least two vertices");
  }
  if (!is_connected(g)) {
    throw PreconditionError("maximal_modular_partition requires a connected graph");
  }

  const auto co_components = connected_components(complement(g));
  if (co_components.size() >= 2) {
    VertexSet rest(g.order());
    for (std::size_t i = 1; i < co_components.size(); ++i) rest |= co_components[i];
    auto partition = ModularPartition::from_parts(g, {co_components.front(), rest});
    partition.k2_case = true;
    return partition;
  }

  // Both g and its complement are connected, so the maximal modules are
  // disjoint and every proper module lies inside one of them. The part of v is
  // the union of all proper closures of {v, u}.
  const VertexSet all = g.vertices();
  VertexSet assigned(g.order());
  std::vector<VertexSet> parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (assigned.contains(v)) continue;
    VertexSet part(g.order());
    part.insert(v);
    for (Vertex u = 0; u < g.order(); ++u) {
      if (part.contains(u)) continue;
      VertexSet closure = smallest_module_containing(g, VertexSet::of(g.order(), {v, u}));
      if (closure != all) part |= closure;
    }
    assigned |= part;
    parts.push_back(std::move(part));
  }
  ModularPartition partition;
  try {
    partition = ModularPartition::from_parts(g, std::move(parts));
  } catch (const PreconditionError& e) {
    throw CertificateError(std::string("maximal_modular_partition: ") + e.what());
  }
  return partition;
}

QuotientGraph quotient(const Graph& g, const ModularPartition& partition) {
  if (partition.host_order != g.order()) {
    throw PreconditionError("partition host order does not match graph");
  }
  // Re-validate: a hand-built partition may not consist of modules.
  const auto checked = ModularPartition::from_parts(g, partition.parts);

  QuotientGraph q;
  q.parts = checked.parts;
  q.part_of = checked.part_index();
  std::vector<Vertex> representative;
  for (const auto& p : q.parts) representative.push_back(*p.first());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < q.parts.size(); ++i) {
    for (Vertex j = i + 1; j < q.parts.size(); ++j) {
      if (g.adjacent(representative[i], representative[j])) edges.emplace_back(i, j);
    }
  }
  q.graph = Graph::from_edges(q.parts.size(), edges);
  return q;
}

QuotientGraph minimal_quotient(const Graph& g) {
  return quotient(g, maximal_modular_partition(g));
}

Decomposition decompose(const Graph& g, const QuotientGraph& q) {
  std::vector<Graph> components;
  std::vector<std::vector<Vertex>> members;
  for (const auto& part : q.parts) {
    auto sub = induced(g, part);
    components.push_back(std::move(sub.graph));
    members.push_back(std::move(sub.to_host));
  }
  return Decomposition{GraphFamily(q.graph, std::move(components)), std::move(members)};
}

}  // namespace modlex
