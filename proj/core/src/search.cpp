#include "search.hpp"

#include <algorithm>
#include <cstdlib>

#include "modlex/errors.hpp"

namespace modlex {

SearchBudget SearchBudget::from_environment() {
  SearchBudget budget;
  if (const char* env = std::getenv("MODLEX_BUDGET_MS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long ms = std::strtoll(env, &end, 10);
    if (end != nullptr && *end == '\0' && ms >= 0) {
      budget.time_limit = std::chrono::milliseconds(ms);
    }
  }
  return budget;
}

}  // namespace modlex

namespace modlex::detail {

void require_search_order(const Graph& g, std::string_view operation) {
  if (g.order() > kMaxSearchOrder) {
    throw PreconditionError(std::string(operation) + ": search supports at most " +
                            std::to_string(kMaxSearchOrder) + " vertices, got " +
                            std::to_string(g.order()));
  }
}

void require_connected(const Graph& g, std::string_view operation) {
  if (!is_connected(g)) {
    throw PreconditionError(std::string(operation) + ": host graph must be connected");
  }
}

BudgetMeter::BudgetMeter(const SearchBudget& budget, std::string_view what)
    : budget_(budget), what_(what), start_(std::chrono::steady_clock::now()) {}

void BudgetMeter::tick(std::uint64_t steps) {
  const std::uint64_t before = used_;
  used_ += steps;
  if (used_ > budget_.max_steps) {
    throw BudgetExceeded(what_ + ": step budget of " + std::to_string(budget_.max_steps) +
                         " exhausted");
  }
  // Clock reads are amortized over 4096 steps.
  if (budget_.time_limit.count() > 0 && (before >> 12) != (used_ >> 12)) {
    if (std::chrono::steady_clock::now() - start_ > budget_.time_limit) {
      throw BudgetExceeded(what_ + ": time budget of " +
                           std::to_string(budget_.time_limit.count()) + " ms exhausted");
    }
  }
}

IsometryChecker::IsometryChecker(const Graph& host)
    : host_(host), dist_(distances(host)), words_((host.order() + 63) / 64) {
  const std::size_t n = host.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (dist_(u, v) == kUnreachable) {
        throw PreconditionError("isometry test requires a connected host graph");
      }
    }
  }
  adj_words_.assign(n * words_, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto row = host.neighbors(v).words();
    std::copy(row.begin(), row.end(), adj_words_.begin() + static_cast<std::ptrdiff_t>(v * words_));
  }
  layer_offset_.resize(n);
  std::size_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    Distance ecc = 0;
    for (Vertex w = 0; w < n; ++w) ecc = std::max(ecc, dist_(v, w));
    layer_offset_[v] = total;
    total += ecc + 1;
  }
  layers_.assign(total * words_, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      layers_[(layer_offset_[v] + dist_(v, w)) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    }
  }
}

bool IsometryChecker::isometric(const VertexSet& subset) const {
  if (subset.universe() != host_.order()) {
    throw PreconditionError("vertex subset universe does not match host order");
  }
  const auto members = subset.members();
  const auto s = subset.words();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Vertex u = members[i];
    const std::uint64_t* adj = &adj_words_[u * words_];
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex v = members[j];
      const Distance d = dist_(u, v);
      if (d <= 1) continue;
      const std::uint64_t* closer = layer(v, d - 1);
      bool found = false;
      for (std::size_t w = 0; w < words_ && !found; ++w) found = (adj[w] & s[w] & closer[w]) != 0;
      if (!found) return false;
    }
  }
  return true;
}

bool IsometryChecker::isometric(Mask subset) const {
  Mask outer = subset;
  while (outer != 0) {
    const auto u = static_cast<Vertex>(std::countr_zero(outer));
    outer &= outer - 1;
    const Mask adj = adj_words_[u] & subset;
    Mask inner = outer;
    while (inner != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(inner));
      inner &= inner - 1;
      const Distance d = dist_(u, v);
      if (d <= 1) continue;
      if ((adj & layers_[layer_offset_[v] + d - 1]) == 0) return false;
    }
  }
  return true;
}

}  // namespace modlex::detail
