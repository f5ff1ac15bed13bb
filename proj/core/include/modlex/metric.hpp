#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "modlex/budget.hpp"
#include "modlex/graph.hpp"

namespace modlex {

/// True iff the subgraph induced by `subset` is connected and preserves every
/// host distance. The empty subset is isometric by convention. Throws
/// PreconditionError if g is disconnected.
bool is_isometric(const Graph& g, const VertexSet& subset);

/// One shortest u-v path, the lexicographically least one: each step moves to
/// the lowest-id neighbor that is one hop closer to v.
std::vector<Vertex> geodesic(const Graph& g, Vertex u, Vertex v);

/// Orders at which a connected graph has no isometric subgraph, with one
/// isometric witness for every other order.
struct NdpReport {
  std::size_t order = 0;
  std::vector<std::size_t> ndp;
  std::map<std::size_t, VertexSet> witnesses;

  bool is_dp() const noexcept { return ndp.empty(); }
  bool achievable(std::size_t k) const { return witnesses.contains(k); }
};

/// Exact ndp set. Witnesses come from greedy deletion/extension walks over
/// isometric subsets; orders those walks miss are settled by enumerating all
/// subsets of that order. Requires a connected host of order <= 64; throws
/// BudgetExceeded when the budget runs out before every order is settled.
NdpReport ndp_set(const Graph& g, const SearchBudget& budget = {});

/// witnesses[k-1] is an isometric vertex subset of exactly k vertices.
struct DpCertificate {
  std::size_t host_order = 0;
  std::vector<VertexSet> witnesses;
};

bool verify_dp_certificate(const Graph& g, const DpCertificate& certificate);

struct DpDecision {
  bool dp = false;
  NdpReport report;
  std::optional<DpCertificate> certificate;
};

DpDecision is_dp(const Graph& g, const SearchBudget& budget = {});

/// A vertex deletion order: removing order[0..i] leaves a subgraph isometric in
/// the host, for every i.
struct SdpOrder {
  std::vector<Vertex> order;
};

bool verify_sdp_order(const Graph& g, const SdpOrder& order);

/// Backtracking search for a deletion order, lowest-id candidate first, with
/// memoization of dead remaining-vertex sets. nullopt when none exists.
std::optional<SdpOrder> sdp_order(const Graph& g, const SearchBudget& budget = {});

/// All deletion sets A (|A| <= max_size) with g - A isometric in g, ordered by
/// size then lexicographically. `sizes` is the set of |A| values present.
struct DeletionSets {
  std::vector<VertexSet> sets;
  std::set<std::size_t> sizes;
};

DeletionSets deletion_sets(const Graph& g, std::size_t max_size,
                           const SearchBudget& budget = {});

}  // namespace modlex
