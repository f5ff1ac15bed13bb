#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "modlex/budget.hpp"
#include "modlex/graph.hpp"
#include "modlex/metric.hpp"
#include "modlex/modular.hpp"
#include "modlex/products.hpp"

namespace modlex {

/// Achievable orders a < b whose interior a+1..b-1 is nonempty and lies
/// entirely in ndp.
struct NonDpInterval {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const NonDpInterval&, const NonDpInterval&) = default;
};

std::vector<NonDpInterval> non_dp_intervals(const NdpReport& report);

/// Decides whether a generalized lexicographic product over `base` with
/// component orders `sizes` is dp: every k in ndp(base) must be covered by an
/// isometric L <= base with |L| < k <= sum of sizes over L. Only the component
/// orders matter, not their structure.
bool lex_product_is_dp(const Graph& base, const NdpReport& base_report,
                       std::span<const std::size_t> sizes, const SearchBudget& budget = {});

/// Uniform-component special case: G[H] with |H| = n is dp iff b <= a*n + 1
/// for every non-dp interval (a, b) of the base.
bool uniform_lex_product_is_dp(const NdpReport& base_report, std::size_t n);

/// Decides isometry of a subset of G[H] from the base alone: the projection
/// must be isometric in G when it has two or more vertices, and the induced
/// subgraph must have diameter <= 2 when it has exactly one.
bool isometric_by_projection(const GraphFamily& family, const ProductGraph& product,
                             const VertexSet& subset);

/// Builds a dp certificate for G[H]. For each order k an isometric L <= G
/// with |L| <= k <= sum over L is chosen (base witnesses first, smallest
/// first; otherwise the smallest, lexicographically least subset), one vertex
/// per block of L is taken and the remainder is filled by lowest inner id.
/// Every witness is re-verified on the product. Throws PreconditionError when
/// the product is not dp.
DpCertificate construct_product_dp_certificate(const GraphFamily& family,
                                               const SearchBudget& budget = {});
DpCertificate construct_product_dp_certificate(const GraphFamily& family,
                                               const NdpReport& base_report,
                                               const SearchBudget& budget = {});

/// Result of deciding dp through the minimal quotient.
struct DecompositionDpResult {
  bool dp = false;
  QuotientGraph quotient;
  NdpReport quotient_report;
  /// Host-coordinate certificate when dp.
  std::optional<DpCertificate> certificate;
};

/// Decides dp for a connected graph via its minimal quotient and, when dp,
/// maps the product certificate back to host ids and verifies it on g.
DecompositionDpResult certify_dp_via_decomposition(const Graph& g,
                                                   const SearchBudget& budget = {});

/// Lifts a deletion order of the base to G[H]: the block of the last base
/// vertex is first shrunk to one vertex, then whole blocks are removed in base
/// order. The result is verified on the product.
SdpOrder lift_sdp_order(const GraphFamily& family, const SdpOrder& base_order);

/// Sufficient (not necessary) signal for dp: no induced cycle of length >= 5.
/// A false result says nothing about dp. Order <= 64.
bool has_no_long_induced_cycle(const Graph& g, const SearchBudget& budget = {});

/// Both sides of the product rule for deletion sets in G box H.
struct DeletionRuleCheck {
  /// (G box H) - A x B is isometric in G box H.
  bool product_side = false;
  /// G - A is isometric in G and H - B is isometric in H.
  bool factor_side = false;
};

DeletionRuleCheck deletion_product_rule(const Graph& g, const Graph& h, const VertexSet& a,
                                        const VertexSet& b);

/// dp certificate for G box H from a deletion order of G and a dp certificate
/// of H. Each retained set is the complement of
/// ({v_1..v_(s-1)} x V(H)) u ({v_s} x A_j), where A_j is the complement of
/// H's witness of order |H| - j.
DpCertificate cartesian_dp_certificate(const Graph& g, const SdpOrder& g_order, const Graph& h,
                                       const DpCertificate& h_certificate);

/// Outcome of searching for connected dp graphs G, H whose Cartesian product
/// is not dp. Experimental: a null counterexample is not a proof.
struct CartesianDpProbe {
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Graph, Graph>> counterexample;
};

CartesianDpProbe probe_cartesian_dp(std::size_t max_factor_order,
                                    const SearchBudget& budget = {});

}  // namespace modlex
