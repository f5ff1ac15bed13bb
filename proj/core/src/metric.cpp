#include "modlex/metric.hpp"

#include <algorithm>
#include <unordered_set>

#include "modlex/errors.hpp"
#include "search.hpp"

namespace modlex {

using detail::BudgetMeter;
using detail::IsometryChecker;
using detail::Mask;

bool is_isometric(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.order()) {
    throw PreconditionError("vertex subset universe does not match host order");
  }
  return IsometryChecker(g).isometric(subset);
}

std::vector<Vertex> geodesic(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw PreconditionError("geodesic endpoint out of range");
  const auto to_target = bfs_distances(g, v);
  if (to_target[u] == kUnreachable) {
    throw PreconditionError("geodesic endpoints lie in different components");
  }
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (cur != v) {
    Vertex next = cur;
    g.neighbors(cur).for_each([&](Vertex w) {
      if (next == cur && to_target[w] + 1 == to_target[cur]) next = w;
    });
    path.push_back(next);
    cur = next;
  }
  return path;
}

namespace {

class NdpSearch {
 public:
  NdpSearch(const Graph& g, const SearchBudget& budget)
      : g_(g), checker_(g), meter_(budget, "ndp search"), n_(g.order()),
        found_(n_ + 1), missing_(n_) {}

  NdpReport run() {
    const Mask all = detail::full_mask(n_);
    record(all);
    record(detail::bit(0));
    if (n_ >= 2) {
      const auto nb = g_.neighbors(0).first();
      record(detail::bit(0) | detail::bit(*nb));
    }

    // Both greedy walks get a bounded share of work before exhaustive search.
    const std::uint64_t walk_cap = 20'000 + 200 * n_ * n_;
    walk_budget_ = walk_cap;
    descend(all);
    for (Vertex v = 0; v < n_ && missing_ > 0; ++v) {
      walk_budget_ = walk_cap / n_ + 1;
      ascend(detail::bit(v));
    }

    NdpReport report;
    report.order = n_;
    for (std::size_t k = 1; k <= n_; ++k) {
      if (!found_[k]) {
        detail::for_each_combination(n_, k, [&](Mask s) {
          meter_.tick();
          if (checker_.isometric(s)) {
            record(s);
            return true;
          }
          return false;
        });
      }
      if (found_[k]) {
        report.witnesses.emplace(k, VertexSet::from_mask(n_, *found_[k]));
      } else {
        report.ndp.push_back(k);
      }
    }
    return report;
  }

 private:
  void record(Mask s) {
    const std::size_t k = detail::popcount(s);
    if (!found_[k]) {
      found_[k] = s;
      --missing_;
    }
  }

  bool spend() {
    if (walk_budget_ == 0) return false;
    --walk_budget_;
    meter_.tick();
    return true;
  }

  void descend(Mask s) {
    if (missing_ == 0 || !visited_.insert(s).second) return;
    record(s);
    for (Mask rest = s; rest != 0 && missing_ > 0; rest &= rest - 1) {
      const Mask child = s & ~(rest & -rest);
      if (child == 0 || visited_.contains(child)) continue;
      if (!spend()) return;
      if (checker_.isometric(child)) descend(child);
    }
  }

  void ascend(Mask s) {
    if (missing_ == 0 || !visited_.insert(s).second) return;
    record(s);
    Mask frontier = 0;
    detail::for_each_bit(s, [&](Vertex v) { frontier |= checker_.adjacency_mask(v); });
    frontier &= ~s;
    for (; frontier != 0 && missing_ > 0; frontier &= frontier - 1) {
      const Mask child = s | (frontier & -frontier);
      if (visited_.contains(child)) continue;
      if (!spend()) return;
      if (checker_.isometric(child)) ascend(child);
    }
  }

  const Graph& g_;
  IsometryChecker checker_;
  BudgetMeter meter_;
  std::size_t n_;
  std::vector<std::optional<Mask>> found_;
  std::size_t missing_;
  std::uint64_t walk_budget_ = 0;
  std::unordered_set<Mask> visited_;
};

class SdpSearch {
 public:
  SdpSearch(const Graph& g, const SearchBudget& budget)
      : checker_(g), meter_(budget, "sdp search") {}

  bool run(Mask remaining) {
    if (detail::popcount(remaining) <= 1) {
      detail::for_each_bit(remaining, [&](Vertex v) { order_.push_back(v); });
      return true;
    }
    if (dead_.contains(remaining)) return false;
    for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
      const Mask lowest = rest & -rest;
      const Mask next = remaining & ~lowest;
      if (dead_.contains(next)) continue;
      meter_.tick();
      if (!checker_.isometric(next)) continue;
      order_.push_back(static_cast<Vertex>(std::countr_zero(lowest)));
      if (run(next)) return true;
      order_.pop_back();
    }
    dead_.insert(remaining);
    return false;
  }

  std::vector<Vertex> take_order() { return std::move(order_); }

 private:
  IsometryChecker checker_;
  BudgetMeter meter_;
  std::unordered_set<Mask> dead_;
  std::vector<Vertex> order_;
};

}  // namespace

NdpReport ndp_set(const Graph& g, const SearchBudget& budget) {
  detail::require_search_order(g, "ndp_set");
  detail::require_connected(g, "ndp_set");
  if (g.order() == 0) return NdpReport{};
  return NdpSearch(g, budget).run();
}

bool verify_dp_certificate(const Graph& g, const DpCertificate& certificate) {
  if (certificate.host_order != g.order() || certificate.witnesses.size() != g.order()) {
    return false;
  }
  IsometryChecker checker(g);
  for (std::size_t k = 1; k <= g.order(); ++k) {
    const VertexSet& w = certificate.witnesses[k - 1];
    if (w.universe() != g.order() || w.size() != k || !checker.isometric(w)) return false;
  }
  return true;
}

DpDecision is_dp(const Graph& g, const SearchBudget& budget) {
  DpDecision decision;
  decision.report = ndp_set(g, budget);
  decision.dp = decision.report.is_dp();
  if (decision.dp) {
    DpCertificate cert{g.order(), {}};
    for (const auto& [k, w] : decision.report.witnesses) cert.witnesses.push_back(w);
    if (!verify_dp_certificate(g, cert)) {
      throw CertificateError("is_dp produced a certificate that fails verification");
    }
    decision.certificate = std::move(cert);
  }
  return decision;
}

bool verify_sdp_order(const Graph& g, const SdpOrder& order) {
  if (order.order.size() != g.order()) return false;
  VertexSet remaining = g.vertices();
  for (Vertex v : order.order) {
    if (!remaining.contains(v)) return false;
    remaining.erase(v);
  }
  if (g.order() == 0) return true;
  IsometryChecker checker(g);
  remaining = g.vertices();
  for (Vertex v : order.order) {
    remaining.erase(v);
    if (!checker.isometric(remaining)) return false;
  }
  return true;
}

std::optional<SdpOrder> sdp_order(const Graph& g, const SearchBudget& budget) {
  detail::require_search_order(g, "sdp_order");
  detail::require_connected(g, "sdp_order");
  SdpSearch search(g, budget);
  if (!search.run(detail::full_mask(g.order()))) return std::nullopt;
  SdpOrder result{search.take_order()};
  if (!verify_sdp_order(g, result)) {
    throw CertificateError("sdp_order produced an order that fails verification");
  }
  return result;
}

DeletionSets deletion_sets(const Graph& g, std::size_t max_size, const SearchBudget& budget) {
  detail::require_search_order(g, "deletion_sets");
  detail::require_connected(g, "deletion_sets");
  const std::size_t n = g.order();
  IsometryChecker checker(g);
  BudgetMeter meter(budget, "deletion set enumeration");
  const Mask all = detail::full_mask(n);
  DeletionSets out;
  for (std::size_t k = 0; k <= std::min(max_size, n); ++k) {
    detail::for_each_combination(n, k, [&](Mask removed) {
      meter.tick();
      if (checker.isometric(all & ~removed)) {
        out.sets.push_back(VertexSet::from_mask(n, removed));
        out.sizes.insert(k);
      }
      return false;
    });
  }
  return out;
}

}  // namespace modlex
