#pragma once

// Internal machinery shared by the search-based operations. Searches index
// vertex subsets with 64-bit masks, so they are limited to hosts of order <= 64.

#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modlex/budget.hpp"
#include "modlex/graph.hpp"

namespace modlex::detail {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxSearchOrder = 64;

inline Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline Mask bit(Vertex v) { return Mask{1} << v; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// Throws PreconditionError when g is too large for mask-indexed search.
void require_search_order(const Graph& g, std::string_view operation);
/// Throws PreconditionError when g is disconnected.
void require_connected(const Graph& g, std::string_view operation);

class BudgetMeter {
 public:
  BudgetMeter(const SearchBudget& budget, std::string_view what);

  /// Counts `steps` subset evaluations; throws BudgetExceeded past a limit.
  void tick(std::uint64_t steps = 1);
  std::uint64_t used() const noexcept { return used_; }

 private:
  SearchBudget budget_;
  std::string what_;
  std::uint64_t used_ = 0;
  std::chrono::steady_clock::time_point start_;
};

/// Isometry test against a fixed connected host.
///
/// A subset S is isometric iff for every pair u, v in S at host distance
/// d >= 2, u has a neighbor inside S at distance d-1 from v. Distance layers
/// around every vertex are precomputed as bitsets so each pair costs one
/// masked intersection.
class IsometryChecker {
 public:
  explicit IsometryChecker(const Graph& host);

  const Graph& host() const noexcept { return host_; }
  const DistanceMatrix& dist() const noexcept { return dist_; }

  bool isometric(const VertexSet& subset) const;
  /// Mask variant; requires host order <= 64.
  bool isometric(Mask subset) const;

  Mask adjacency_mask(Vertex v) const { return adj_words_[v * words_]; }

 private:
  const std::uint64_t* layer(Vertex v, Distance t) const {
    return &layers_[(layer_offset_[v] + t) * words_];
  }

  const Graph& host_;
  DistanceMatrix dist_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_words_;
  std::vector<std::size_t> layer_offset_;
  std::vector<std::uint64_t> layers_;
};

/// Visits every k-subset of {0..n-1} (n <= 64) as a mask, in lexicographic
/// order of the sorted member lists. Stops early when fn returns true;
/// returns whether it stopped early.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  if (k == 0) return fn(Mask{0});
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (std::size_t i : idx) m |= Mask{1} << i;
    if (fn(m)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Lexicographic comparison of the sorted member lists of two masks.
inline bool mask_lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const auto la = std::countr_zero(a);
    const auto lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace modlex::detail
