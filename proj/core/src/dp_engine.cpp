#include "modlex/dp_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "modlex/enumerate.hpp"
#include "modlex/errors.hpp"
#include "search.hpp"

namespace modlex {

using detail::BudgetMeter;
using detail::IsometryChecker;
using detail::Mask;

namespace {

std::size_t weight(Mask m, std::span<const std::size_t> sizes) {
  std::size_t total = 0;
  detail::for_each_bit(m, [&](Vertex v) { total += sizes[v]; });
  return total;
}

void require_base(const Graph& base, std::span<const std::size_t> sizes, const char* op) {
  if (base.order() < 2) throw PreconditionError(std::string(op) + ": base needs >= 2 vertices");
  detail::require_search_order(base, op);
  detail::require_connected(base, op);
  if (sizes.size() != base.order()) {
    throw PreconditionError(std::string(op) + ": size map has " + std::to_string(sizes.size()) +
                            " entries for " + std::to_string(base.order()) + " base vertices");
  }
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; })) {
    throw PreconditionError(std::string(op) + ": component sizes must be >= 1");
  }
}

// Smallest, then lexicographically least, isometric L with
// 2 <= |L| <= max_size whose component sizes sum to at least k.
std::optional<Mask> smallest_cover(const IsometryChecker& checker,
                                   std::span<const std::size_t> sizes, std::size_t k,
                                   std::size_t max_size, BudgetMeter& meter) {
  const std::size_t n = sizes.size();
  std::vector<std::size_t> desc(sizes.begin(), sizes.end());
  std::sort(desc.begin(), desc.end(), std::greater<>());
  std::size_t best_possible = desc.empty() ? 0 : desc[0];
  for (std::size_t j = 2; j <= std::min(max_size, n); ++j) {
    best_possible += desc[j - 1];
    if (best_possible < k) continue;
    std::optional<Mask> hit;
    detail::for_each_combination(n, j, [&](Mask m) {
      meter.tick();
      if (weight(m, sizes) >= k && checker.isometric(m)) {
        hit = m;
        return true;
      }
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

// Smallest report witness W with |W| <= limit and |W| <= k <= weight(W);
// singletons only qualify for k = 1.
std::optional<Mask> witness_cover(const NdpReport& report, std::span<const std::size_t> sizes,
                                  std::size_t k, std::size_t limit) {
  for (const auto& [order, w] : report.witnesses) {
    if (order > limit || order > k) break;
    if (order == 1 && k != 1) continue;
    const Mask m = w.to_mask();
    if (weight(m, sizes) >= k) return m;
  }
  return std::nullopt;
}

struct ProductCertificate {
  ProductGraph product;
  DpCertificate certificate;
};

ProductCertificate build_product_certificate(const GraphFamily& family,
                                             const NdpReport& base_report,
                                             const SearchBudget& budget) {
  const Graph& base = family.base();
  const auto sizes = family.sizes();
  if (!lex_product_is_dp(base, base_report, sizes, budget)) {
    throw PreconditionError("the lexicographic product is not distance preserving");
  }
  ProductGraph product = generalized_lex_product(family);
  const std::size_t total = product.graph.order();
  IsometryChecker checker(base);
  BudgetMeter meter(budget, "product certificate");

  DpCertificate cert{total, {}};
  for (std::size_t k = 1; k <= total; ++k) {
    std::optional<Mask> cover = witness_cover(base_report, sizes, k, base.order());
    if (!cover && k == 1) cover = detail::bit(0);
    if (!cover) cover = smallest_cover(checker, sizes, k, base.order(), meter);
    if (!cover) {
      throw CertificateError("no isometric base subgraph covers order " + std::to_string(k));
    }
    VertexSet witness(total);
    std::size_t remaining = k;
    detail::for_each_bit(*cover, [&](Vertex u) {
      witness.insert(product.id_of(u, 0));
      --remaining;
    });
    detail::for_each_bit(*cover, [&](Vertex u) {
      for (Vertex x = 1; x < sizes[u] && remaining > 0; ++x, --remaining) {
        witness.insert(product.id_of(u, x));
      }
    });
    cert.witnesses.push_back(std::move(witness));
  }
  if (!verify_dp_certificate(product.graph, cert)) {
    throw CertificateError("product dp certificate failed verification");
  }
  return {std::move(product), std::move(cert)};
}

}  // namespace

std::vector<NonDpInterval> non_dp_intervals(const NdpReport& report) {
  std::vector<NonDpInterval> out;
  const auto& ndp = report.ndp;
  for (std::size_t i = 0; i < ndp.size();) {
    std::size_t j = i;
    while (j + 1 < ndp.size() && ndp[j + 1] == ndp[j] + 1) ++j;
    out.push_back({ndp[i] - 1, ndp[j] + 1});
    i = j + 1;
  }
  return out;
}

bool lex_product_is_dp(const Graph& base, const NdpReport& base_report,
                       std::span<const std::size_t> sizes, const SearchBudget& budget) {
  require_base(base, sizes, "lex_product_is_dp");
  if (base_report.order != base.order()) {
    throw PreconditionError("lex_product_is_dp: report does not belong to the base graph");
  }
  if (base_report.is_dp()) return true;
  IsometryChecker checker(base);
  BudgetMeter meter(budget, "lex_product_is_dp");
  for (std::size_t k : base_report.ndp) {
    if (witness_cover(base_report, sizes, k, k - 1)) continue;
    if (!smallest_cover(checker, sizes, k, k - 1, meter)) return false;
  }
  return true;
}

bool uniform_lex_product_is_dp(const NdpReport& base_report, std::size_t n) {
  if (base_report.order < 2) {
    throw PreconditionError("uniform_lex_product_is_dp: base needs >= 2 vertices");
  }
  if (n == 0) throw PreconditionError("uniform_lex_product_is_dp: component order must be >= 1");
  const auto intervals = non_dp_intervals(base_report);
  return std::all_of(intervals.begin(), intervals.end(),
                     [n](const NonDpInterval& iv) { return iv.b <= iv.a * n + 1; });
}

bool isometric_by_projection(const GraphFamily& family, const ProductGraph& product,
                             const VertexSet& subset) {
  const Graph& base = family.base();
  if (base.order() < 2) throw PreconditionError("isometric_by_projection: base needs >= 2 vertices");
  if (!is_connected(base)) throw PreconditionError("isometric_by_projection: base disconnected");
  const VertexSet pi = project_pi(product, subset);
  const std::size_t spread = pi.size();
  if (spread == 0) return true;
  if (spread >= 2) return is_isometric(base, pi);
  return diameter(induced(product.graph, subset).graph) <= 2;
}

DpCertificate construct_product_dp_certificate(const GraphFamily& family,
                                               const SearchBudget& budget) {
  return construct_product_dp_certificate(family, ndp_set(family.base(), budget), budget);
}

DpCertificate construct_product_dp_certificate(const GraphFamily& family,
                                               const NdpReport& base_report,
                                               const SearchBudget& budget) {
  return build_product_certificate(family, base_report, budget).certificate;
}

DecompositionDpResult certify_dp_via_decomposition(const Graph& g, const SearchBudget& budget) {
  detail::require_connected(g, "certify_dp_via_decomposition");
  DecompositionDpResult result;
  if (g.order() <= 1) {
    result.dp = true;
    DpCertificate cert{g.order(), {}};
    if (g.order() == 1) cert.witnesses.push_back(g.vertices());
    result.certificate = std::move(cert);
    return result;
  }
  result.quotient = minimal_quotient(g);
  const Decomposition dec = decompose(g, result.quotient);
  result.quotient_report = ndp_set(result.quotient.graph, budget);
  result.dp = lex_product_is_dp(result.quotient.graph, result.quotient_report,
                                dec.family.sizes(), budget);
  if (!result.dp) return result;

  const auto built = build_product_certificate(dec.family, result.quotient_report, budget);
  DpCertificate host_cert{g.order(), {}};
  for (const VertexSet& w : built.certificate.witnesses) {
    VertexSet mapped(g.order());
    w.for_each([&](Vertex id) {
      const auto [v, x] = built.product.vertex_map[id];
      mapped.insert(dec.part_members[v][x]);
    });
    host_cert.witnesses.push_back(std::move(mapped));
  }
  if (!verify_dp_certificate(g, host_cert)) {
    throw CertificateError("decomposition certificate failed verification on the host");
  }
  result.certificate = std::move(host_cert);
  return result;
}

SdpOrder lift_sdp_order(const GraphFamily& family, const SdpOrder& base_order) {
  const Graph& base = family.base();
  if (base.order() < 2) throw PreconditionError("lift_sdp_order: base needs >= 2 vertices");
  if (!is_connected(base) || !verify_sdp_order(base, base_order)) {
    throw PreconditionError("lift_sdp_order: invalid base deletion order");
  }
  const ProductGraph product = generalized_lex_product(family);
  const Vertex last = base_order.order.back();
  const auto last_size = static_cast<Vertex>(family.component(last).order());

  SdpOrder lifted;
  for (Vertex x = 0; x + 1 < last_size; ++x) lifted.order.push_back(product.id_of(last, x));
  for (std::size_t i = 0; i + 1 < base_order.order.size(); ++i) {
    const Vertex u = base_order.order[i];
    for (Vertex x = 0; x < family.component(u).order(); ++x) {
      lifted.order.push_back(product.id_of(u, x));
    }
  }
  lifted.order.push_back(product.id_of(last, last_size - 1));
  if (!verify_sdp_order(product.graph, lifted)) {
    throw CertificateError("lifted deletion order failed verification");
  }
  return lifted;
}

namespace {

class LongCycleSearch {
 public:
  LongCycleSearch(const Graph& g, const SearchBudget& budget)
      : meter_(budget, "induced cycle search") {
    for (Vertex v = 0; v < g.order(); ++v) adj_.push_back(g.neighbors(v).to_mask());
  }

  bool found_any() {
    const auto n = static_cast<Vertex>(adj_.size());
    for (Vertex s = 0; s < n; ++s) {
      start_ = s;
      allowed_ = detail::full_mask(n) & ~detail::full_mask(s + 1);
      if (extend(s, detail::bit(s), 0, 1)) return true;
    }
    return false;
  }

 private:
  // Chordless path start_ .. last with `length` vertices; `blocked` holds the
  // neighbors of its interior vertices.
  bool extend(Vertex last, Mask on_path, Mask blocked, std::size_t length) {
    meter_.tick();
    Mask next = adj_[last] & allowed_ & ~on_path & ~blocked;
    const Mask blocked_next = last == start_ ? blocked : blocked | adj_[last];
    for (; next != 0; next &= next - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(next));
      if (length >= 2 && (adj_[start_] & detail::bit(w)) != 0) {
        if (length + 1 >= 5) return true;
        continue;
      }
      if (extend(w, on_path | detail::bit(w), blocked_next, length + 1)) return true;
    }
    return false;
  }

  BudgetMeter meter_;
  std::vector<Mask> adj_;
  Vertex start_ = 0;
  Mask allowed_ = 0;
};

}  // namespace

bool has_no_long_induced_cycle(const Graph& g, const SearchBudget& budget) {
  detail::require_search_order(g, "has_no_long_induced_cycle");
  return !LongCycleSearch(g, budget).found_any();
}

DeletionRuleCheck deletion_product_rule(const Graph& g, const Graph& h, const VertexSet& a,
                                        const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != h.order()) {
    throw PreconditionError("deletion_product_rule: subset universe mismatch");
  }
  if (a.empty() || b.empty()) {
    throw PreconditionError("deletion_product_rule: deletion sets must be nonempty");
  }
  const ProductGraph product = cartesian_product(g, h);
  VertexSet kept = product.graph.vertices();
  a.for_each([&](Vertex x) { b.for_each([&](Vertex y) { kept.erase(product.id_of(x, y)); }); });

  DeletionRuleCheck check;
  check.product_side = is_isometric(product.graph, kept);
  check.factor_side = is_isometric(g, ~a) && is_isometric(h, ~b);
  return check;
}

DpCertificate cartesian_dp_certificate(const Graph& g, const SdpOrder& g_order, const Graph& h,
                                       const DpCertificate& h_certificate) {
  if (g.order() == 0 || h.order() == 0) {
    throw PreconditionError("cartesian_dp_certificate: factors must be nonempty");
  }
  if (!is_connected(g) || !verify_sdp_order(g, g_order)) {
    throw PreconditionError("cartesian_dp_certificate: invalid deletion order for G");
  }
  if (!is_connected(h) || !verify_dp_certificate(h, h_certificate)) {
    throw PreconditionError("cartesian_dp_certificate: invalid dp certificate for H");
  }
  const ProductGraph product = cartesian_product(g, h);
  const std::size_t hn = h.order();
  const std::size_t total = product.graph.order();
  const VertexSet all_h = h.vertices();

  DpCertificate cert{total, {}};
  for (std::size_t kept_count = 1; kept_count <= total; ++kept_count) {
    const std::size_t removed = total - kept_count;
    VertexSet kept = product.graph.vertices();
    if (removed > 0) {
      const std::size_t s = (removed + hn - 1) / hn;  // 1-based layer index
      const std::size_t j = removed - (s - 1) * hn;   // 1..|H|
      for (std::size_t i = 0; i + 1 < s; ++i) {
        for (Vertex y = 0; y < hn; ++y) kept.erase(product.id_of(g_order.order[i], y));
      }
      const VertexSet a_j =
          j == hn ? all_h : all_h - h_certificate.witnesses[hn - j - 1];
      a_j.for_each([&](Vertex y) { kept.erase(product.id_of(g_order.order[s - 1], y)); });
    }
    cert.witnesses.push_back(std::move(kept));
  }
  if (!verify_dp_certificate(product.graph, cert)) {
    throw CertificateError("Cartesian product dp certificate failed verification");
  }
  return cert;
}

CartesianDpProbe probe_cartesian_dp(std::size_t max_factor_order, const SearchBudget& budget) {
  if (max_factor_order > 6) {
    throw PreconditionError("probe_cartesian_dp: factor order is limited to 6");
  }
  std::vector<Graph> dp_graphs;
  for (std::size_t n = 1; n <= max_factor_order; ++n) {
    for (Graph& g : connected_graphs_up_to_isomorphism(n)) {
      if (ndp_set(g, budget).is_dp()) dp_graphs.push_back(std::move(g));
    }
  }
  CartesianDpProbe probe;
  for (std::size_t i = 0; i < dp_graphs.size(); ++i) {
    for (std::size_t j = i; j < dp_graphs.size(); ++j) {
      ++probe.pairs_checked;
      const ProductGraph p = cartesian_product(dp_graphs[i], dp_graphs[j]);
      if (!ndp_set(p.graph, budget).is_dp()) {
        probe.counterexample = std::make_pair(dp_graphs[i], dp_graphs[j]);
        return probe;
      }
    }
  }
  return probe;
}

}  // namespace modlex
