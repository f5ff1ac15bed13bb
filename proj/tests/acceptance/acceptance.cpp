// Acceptance suite: one PASS/FAIL line per criterion, each under its own
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modlex/datasets.hpp"
#include "modlex/dp_engine.hpp"
#include "modlex/enumerate.hpp"
#include "modlex/errors.hpp"
#include "modlex/io.hpp"
#include "oracles.hpp"

using namespace modlex;
using oracle::Mask;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
    ++checks_;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t checks() const { return checks_; }

 private:
  std::string failure_;
  std::size_t checks_ = 0;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> run;
};

std::string members(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s.members()) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  return out.str() + '}';
}

std::string describe(const Graph& g) {
  std::string text = emit_edge_list(g);
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

GraphFamily fig1_family() {
  return GraphFamily(path_graph(3), {cycle_graph(5), complete_graph(3), complete_graph(2)});
}

Graph component_of_order(std::size_t n, std::size_t salt) {
  switch (salt % 3) {
    case 0: return complete_graph(n);
    case 1: return empty_graph(n);
    default: return path_graph(n);
  }
}

void c5_is_not_dp(Check& c) {
  const Graph c5 = cycle_graph(5);
  c.expect(oracle::ndp(c5) == std::vector<std::size_t>{4}, "brute-force ndp(C5) != {4}");
  c.expect(ndp_set(c5).ndp == std::vector<std::size_t>{4}, "ndp_set(C5) != {4}");
  c.expect(!is_dp(c5).dp, "is_dp(C5) returned true");
}

void fig2_is_dp(Check& c) {
  const Graph fig2 = load_dataset("fig2").graph;
  c.expect(oracle::is_dp(fig2), "brute force says fig2 is not dp");
  const Graph c5 = cycle_graph(5);
  c.expect(lex_product_is_dp(c5, ndp_set(c5), std::vector<std::size_t>{2, 1, 1, 1, 1}),
           "product rule says C5 with one K2 is not dp");
}

void fig1_is_dp(Check& c) {
  const auto family = fig1_family();
  const Graph product = generalized_lex_product(family).graph;
  c.expect(product == load_dataset("fig1").graph, "fig1 dataset differs from P3[{C5,K3,K2}]");
  c.expect(product.order() == 10 && product.size() == 30, "fig1 is not 10 vertices / 30 edges");
  // Tree base: every order of the base is achievable, so any family is dp.
  const Graph& base = family.base();
  c.expect(is_connected(base) && base.size() + 1 == base.order(), "base is not a tree");
  const auto report = ndp_set(base);
  c.expect(report.is_dp(), "tree base has a non-dp order");
  c.expect(lex_product_is_dp(base, report, family.sizes()), "product rule rejects fig1");
  const auto cert = construct_product_dp_certificate(family, report);
  c.expect(cert.witnesses.size() == 10, "certificate does not cover 10 orders");
  c.expect(verify_dp_certificate(product, cert), "fig1 certificate fails verification");
}

void fig3_pipeline(Check& c) {
  const Graph m = load_dataset("fig3").graph;
  const auto partition = maximal_modular_partition(m);
  c.expect(partition.parts.size() == 21, "fig3 partition does not have 21 parts");
  std::vector<std::size_t> sizes;
  for (const auto& p : partition.parts) {
    if (p.size() > 1) sizes.push_back(p.size());
  }
  c.expect(sizes == std::vector<std::size_t>{6, 2, 7, 3, 5, 6}, "non-trivial part sizes differ");
  for (const auto& p : partition.parts) {
    c.expect(is_maximal_module(m, p), "part " + members(p) + " is not a maximal module");
  }
  const auto q = quotient(m, partition);
  c.expect(are_isomorphic(q.graph, load_dataset("fig3-quotient").graph, {21}),
           "quotient is not isomorphic to fig3-quotient");
  c.expect(has_no_long_induced_cycle(q.graph), "quotient has an induced cycle of length >= 5");
  const auto d = decompose(m, q);
  const auto cert = construct_product_dp_certificate(d.family);
  // Map product ids back to host ids and verify on M itself.
  const auto product = generalized_lex_product(d.family);
  DpCertificate host{m.order(), {}};
  for (const auto& w : cert.witnesses) {
    VertexSet s(m.order());
    for (Vertex id : w.members()) {
      const auto [v, x] = product.vertex_map[id];
      s.insert(d.part_members[v][x]);
    }
    host.witnesses.push_back(s);
  }
  c.expect(host.witnesses.size() == 44, "certificate does not cover 44 orders");
  c.expect(verify_dp_certificate(m, host), "fig3 certificate fails verification");
}

void minimal_quotient_iff_maximal_parts(Check& c) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      for (const auto& parts : oracle::set_partitions(n)) {
        if (parts.size() < 3) continue;
        bool modular = true;
        for (Mask p : parts) modular = modular && oracle::module(g, p);
        if (!modular) continue;
        std::vector<VertexSet> sets;
        bool all_maximal = true;
        for (Mask p : parts) {
          sets.push_back(oracle::to_set(n, p));
          all_maximal = all_maximal && oracle::maximal_module(g, p);
          c.expect(is_maximal_module(g, sets.back()) == oracle::maximal_module(g, p),
                   "is_maximal_module disagrees with brute force");
        }
        const auto q = quotient(g, ModularPartition::from_parts(g, sets));
        const bool minimal = !oracle::has_nontrivial_module(q.graph);
        c.expect(minimal == all_maximal,
                 "minimal quotient <=> maximal decomposition fails on " + describe(g));
      }
    }
  }
  // K4 with parts {0,1,2},{3}: quotient K2 has no non-trivial module, yet {3}
  // is not a maximal module.
  const Graph k4 = complete_graph(4);
  const auto p = ModularPartition::from_parts(k4, {VertexSet::of(4, {0, 1, 2}), VertexSet::of(4, {3})});
  const auto q = quotient(k4, p);
  c.expect(q.graph == complete_graph(2), "K4 {3,1} quotient is not K2");
  c.expect(!oracle::has_nontrivial_module(q.graph), "K2 has a non-trivial module");
  c.expect(!is_maximal_module(k4, VertexSet::of(4, {3})), "{3} reported maximal in K4");
}

void product_rule_equivalence(Check& c) {
  std::size_t products = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& base : connected_graphs_up_to_isomorphism(n)) {
      const auto report = ndp_set(base);
      std::vector<std::size_t> sizes(n, 1);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t total) {
        if (i == n) {
          std::vector<Graph> components;
          for (Vertex u = 0; u < n; ++u) components.push_back(component_of_order(sizes[u], u + total));
          const Graph product = generalized_lex_product(GraphFamily(base, components)).graph;
          const bool fast = lex_product_is_dp(base, report, sizes);
          const bool brute = oracle::ndp(product).empty();
          ++products;
          c.expect(fast == brute, "product rule disagrees with brute force on base " +
                                      describe(base));
          return;
        }
        for (std::size_t s = 1; total + s + (n - i - 1) <= 12; ++s) {
          sizes[i] = s;
          rec(i + 1, total + s);
        }
      };
      rec(0, 0);
    }
  }
  c.expect(products == 20108, "unexpected workload size " + std::to_string(products));
}

void distances_and_transfer(Check& c) {
  std::mt19937 rng(2024);
  auto random_family = [&] {
    const std::size_t n = 2 + rng() % 5;
    Graph base = oracle::random_connected_graph(rng, n, 0.3);
    std::vector<Graph> components;
    for (std::size_t v = 0; v < n; ++v) components.push_back(oracle::random_graph(rng, 1 + rng() % 4, 0.5));
    return GraphFamily(std::move(base), std::move(components));
  };
  for (int round = 0; round < 100; ++round) {
    const auto f = random_family();
    const auto p = generalized_lex_product(f);
    const auto d = oracle::floyd(p.graph);
    for (Vertex a = 0; a < p.graph.order(); ++a) {
      for (Vertex b = 0; b < p.graph.order(); ++b) {
        c.expect(static_cast<int>(lex_distance(f, p.vertex_map[a], p.vertex_map[b])) == d[a][b],
                 "closed-form distance disagrees with BFS");
      }
    }
  }
  for (int round = 0; round < 500; ++round) {
    const auto f = random_family();
    const auto p = generalized_lex_product(f);
    const Mask m = oracle::random_mask(rng, p.graph.order());
    c.expect(isometric_by_projection(f, p, oracle::to_set(p.graph.order(), m)) ==
                 oracle::isometric(p.graph, m),
             "projection test disagrees with direct isometry");
  }
}

void cartesian_rules(Check& c) {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) graphs.push_back(g);
  }
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      const Graph prod = cartesian_product(g, h).graph;
      const std::size_t n = g.order(), m = h.order();
      for (Mask a = 1; a <= oracle::full(n); ++a) {
        const bool g_side = oracle::isometric(g, oracle::full(n) & ~a);
        for (Mask b = 1; b <= oracle::full(m); ++b) {
          Mask removed = 0;
          for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < m; ++y) {
              if ((a & oracle::bit(x)) && (b & oracle::bit(y))) removed |= oracle::bit(x * m + y);
            }
          }
          const bool product_side = oracle::isometric(prod, oracle::full(n * m) & ~removed);
          const bool factor_side = g_side && oracle::isometric(h, oracle::full(m) & ~b);
          c.expect(product_side == factor_side, "deletion-set product rule fails");
          const auto r = deletion_product_rule(g, h, oracle::to_set(n, a), oracle::to_set(m, b));
          c.expect(r.product_side == product_side && r.factor_side == factor_side,
                   "deletion_product_rule disagrees with brute force");
        }
      }
    }
  }
  auto certify = [&](const Graph& g, const Graph& h, std::size_t orders, const char* name) {
    const auto order = sdp_order(g);
    const auto hdp = is_dp(h);
    c.expect(order.has_value() && hdp.dp, std::string(name) + ": factor preconditions fail");
    if (!order || !hdp.dp) return;
    const auto cert = cartesian_dp_certificate(g, *order, h, *hdp.certificate);
    c.expect(cert.witnesses.size() == orders, std::string(name) + ": wrong number of orders");
    c.expect(verify_dp_certificate(cartesian_product(g, h).graph, cert),
             std::string(name) + ": certificate fails verification");
  };
  certify(path_graph(3), complete_graph(3), 9, "P3 x K3");
  certify(path_graph(4), load_dataset("fig2").graph, 24, "P4 x fig2");
}

void module_properties(Check& c) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n)) {
      // K2 quotient exists iff some two-module split is fully joined.
      bool k2 = false;
      for (Mask a = 1; a < oracle::full(n); ++a) {
        const Mask b = oracle::full(n) & ~a;
        if (!oracle::module(g, a) || !oracle::module(g, b)) continue;
        bool joined = true;
        for (Vertex x = 0; x < n; ++x) {
          for (Vertex y = 0; y < n; ++y) {
            if ((a & oracle::bit(x)) && (b & oracle::bit(y))) joined = joined && g.adjacent(x, y);
          }
        }
        k2 = k2 || joined;
      }
      c.expect(k2 == (n >= 2 && !is_connected(complement(g))),
               "K2 quotient <=> disconnected complement fails");
      if (!is_connected(g)) continue;
      c.expect(has_k2_quotient(g) == k2, "has_k2_quotient disagrees with brute force");

      const auto modules = oracle::modules(g);
      for (Mask h : modules) {
        for (Mask k : modules) {
          if (h & k) c.expect(oracle::module(g, h | k), "union of overlapping modules is not a module");
        }
      }

      // Round trip M = (M/P)[P] for every modular partition P.
      for (const auto& parts : oracle::set_partitions(n)) {
        bool modular = true;
        for (Mask p : parts) modular = modular && oracle::module(g, p);
        if (!modular) continue;
        std::vector<VertexSet> sets;
        for (Mask p : parts) sets.push_back(oracle::to_set(n, p));
        const auto q = quotient(g, ModularPartition::from_parts(g, sets));
        const auto d = decompose(g, q);
        const auto product = generalized_lex_product(d.family, BaseConnectivity::kAllowDisconnected);
        std::vector<Vertex> to_host(n);
        for (Vertex id = 0; id < n; ++id) {
          const auto [v, x] = product.vertex_map[id];
          to_host[id] = d.part_members[v][x];
        }
        c.expect(relabel(product.graph, to_host) == g, "M != (M/P)[P]");
      }

      // Uniqueness of the maximal decomposition outside the K2 case.
      if (n >= 2 && !k2) {
        std::size_t found = 0;
        const auto expected = maximal_modular_partition(g);
        for (const auto& parts : oracle::set_partitions(n)) {
          bool maximal = true;
          for (Mask p : parts) maximal = maximal && oracle::maximal_module(g, p);
          if (!maximal) continue;
          ++found;
          std::vector<Mask> got;
          for (const auto& p : expected.parts) got.push_back(oracle::to_mask(p));
          c.expect(got == parts, "maximal partition differs from the brute-force one");
        }
        c.expect(found == 1, "maximal modular partition is not unique");
      }
    }
  }
  // (G[H])/H = G for connected bases and every component choice up to K2/E2/P3.
  const std::vector<Graph> pool{complete_graph(1), complete_graph(2), empty_graph(2), path_graph(3)};
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& base : connected_graphs_up_to_isomorphism(n)) {
      std::vector<std::size_t> pick(n, 0);
      for (std::size_t code = 0;; ++code) {
        std::size_t rest = code;
        for (std::size_t i = 0; i < n; ++i) {
          pick[i] = rest % pool.size();
          rest /= pool.size();
        }
        if (rest != 0) break;
        std::vector<Graph> components;
        for (std::size_t i = 0; i < n; ++i) components.push_back(pool[pick[i]]);
        const auto product = generalized_lex_product(GraphFamily(base, components));
        std::vector<VertexSet> blocks;
        for (Vertex u = 0; u < n; ++u) blocks.push_back(product.block(u));
        const auto q = quotient(product.graph, ModularPartition::from_parts(product.graph, blocks));
        c.expect(q.graph == base, "(G[H])/H != G");
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "C5 is non-dp with ndp = {4}", 1, c5_is_not_dp},
      {2, "fig2 is dp by brute force and by the product rule", 1, fig2_is_dp},
      {3, "fig1 is dp via the tree base and a verified 10-order certificate", 10, fig1_is_dp},
      {4, "fig3 partition, quotient, cycle test and 44-order certificate", 300, fig3_pipeline},
      {5, "minimal quotient <=> maximal decomposition, n <= 6, plus the K4 remark", 120,
       minimal_quotient_iff_maximal_parts},
      {6, "product dp rule equals brute force, |G| <= 5, total order <= 12", 300,
       product_rule_equivalence},
      {7, "closed-form distances and projection isometry test", 60, distances_and_transfer},
      {8, "deletion-set product rule and Cartesian certificates", 120, cartesian_rules},
      {9, "module union, round trips, uniqueness, K2 quotient, n <= 6", 120, module_properties},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string reason = !error.empty() ? error : check.failure();
    if (reason.empty() && seconds > criterion.limit_seconds) reason = "time limit exceeded";
    const bool pass = reason.empty();
    failures += !pass;
    std::printf("%s criterion %d: %s [%zu checks, %.2f s, limit %.0f s]%s%s\n",
                pass ? "PASS" : "FAIL", criterion.id, criterion.title, check.checks(), seconds,
                criterion.limit_seconds, pass ? "" : " -- ", reason.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
