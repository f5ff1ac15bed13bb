#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "modlex/datasets.hpp"
#include "modlex/enumerate.hpp"
#include "modlex/errors.hpp"
#include "modlex/metric.hpp"
#include "oracles.hpp"

using namespace modlex;

TEST(IsIsometric, Examples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(is_isometric(c5, VertexSet::of(5, {0, 1, 2})));
  EXPECT_FALSE(is_isometric(c5, VertexSet::of(5, {0, 1, 2, 3})));
  EXPECT_TRUE(is_isometric(c5, VertexSet::full(5)));
  EXPECT_TRUE(is_isometric(c5, VertexSet(5)));
  EXPECT_FALSE(is_isometric(c5, VertexSet::of(5, {0, 2})));
  EXPECT_THROW(is_isometric(empty_graph(2), VertexSet::of(2, {0})), PreconditionError);
}

TEST(IsIsometric, AgreesWithFloydOracle) {
  std::mt19937 rng(21);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + rng() % 11;
    const Graph g = oracle::random_connected_graph(rng, n, 0.25);
    const auto m = oracle::random_mask(rng, n);
    EXPECT_EQ(is_isometric(g, oracle::to_set(n, m)), oracle::isometric(g, m));
  }
}

TEST(Geodesic, Examples) {
  EXPECT_EQ(geodesic(cycle_graph(5), 0, 2), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(geodesic(cycle_graph(5), 3, 3), std::vector<Vertex>{3});
  EXPECT_EQ(geodesic(path_graph(4), 0, 3), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(geodesic(cycle_graph(6), 0, 3), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Geodesic, IsAShortestPath) {
  std::mt19937 rng(22);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng() % 10;
    const Graph g = oracle::random_connected_graph(rng, n, 0.2);
    const auto d = oracle::floyd(g);
    const Vertex u = rng() % n, v = rng() % n;
    const auto path = geodesic(g, u, v);
    ASSERT_EQ(static_cast<int>(path.size()) - 1, d[u][v]);
    EXPECT_EQ(path.front(), u);
    EXPECT_EQ(path.back(), v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(g.adjacent(path[i], path[i + 1]));
  }
}

TEST(Ndp, Examples) {
  const auto c5 = ndp_set(cycle_graph(5));
  EXPECT_EQ(c5.ndp, std::vector<std::size_t>{4});
  EXPECT_FALSE(c5.is_dp());
  EXPECT_FALSE(c5.achievable(4));
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_TRUE(ndp_set(path_graph(n)).ndp.empty()) << n;
  EXPECT_TRUE(ndp_set(load_dataset("fig2").graph).ndp.empty());
  EXPECT_EQ(ndp_set(cycle_graph(7)).ndp, (std::vector<std::size_t>{5, 6}));
}

TEST(Ndp, WitnessesAreIsometricAndNdpMatchesOracle) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      const auto report = ndp_set(g);
      EXPECT_EQ(report.ndp, oracle::ndp(g));
      for (const auto& [k, w] : report.witnesses) {
        EXPECT_EQ(w.size(), k);
        EXPECT_TRUE(oracle::isometric(g, oracle::to_mask(w)));
      }
      EXPECT_EQ(report.witnesses.size() + report.ndp.size(), n);
    }
  }
}

TEST(Ndp, RandomGraphsOnEightVertices) {
  std::mt19937 rng(23);
  for (int round = 0; round < 60; ++round) {
    const Graph g = oracle::random_connected_graph(rng, 8, 0.15 + 0.05 * (round % 6));
    EXPECT_EQ(ndp_set(g).ndp, oracle::ndp(g));
  }
}

TEST(Ndp, BudgetExhaustionIsReported) {
  SearchBudget tiny;
  tiny.max_steps = 3;
  EXPECT_THROW(ndp_set(cycle_graph(9), tiny), BudgetExceeded);
}

TEST(IsDp, Examples) {
  EXPECT_FALSE(is_dp(cycle_graph(5)).dp);
  EXPECT_FALSE(is_dp(cycle_graph(5)).certificate.has_value());
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto d = is_dp(complete_graph(n));
    ASSERT_TRUE(d.dp);
    EXPECT_TRUE(verify_dp_certificate(complete_graph(n), *d.certificate));
  }
  const Graph fig1 = load_dataset("fig1").graph;
  const auto d = is_dp(fig1);
  ASSERT_TRUE(d.dp);
  EXPECT_TRUE(verify_dp_certificate(fig1, *d.certificate));
}

TEST(IsDp, MatchesNdpAndSdpImpliesDp) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      const auto d = is_dp(g);
      EXPECT_EQ(d.dp, d.report.ndp.empty());
      if (d.dp) EXPECT_TRUE(verify_dp_certificate(g, *d.certificate));
      if (sdp_order(g)) EXPECT_TRUE(d.dp);
    }
  }
}

TEST(DpCertificate, VerifierRejectsBadWitnesses) {
  const Graph c5 = cycle_graph(5);
  DpCertificate bad{5, {VertexSet::of(5, {0}), VertexSet::of(5, {0, 1}), VertexSet::of(5, {0, 1, 2}),
                        VertexSet::of(5, {0, 1, 2, 3}), VertexSet::full(5)}};
  EXPECT_FALSE(verify_dp_certificate(c5, bad));
  bad.witnesses.pop_back();
  EXPECT_FALSE(verify_dp_certificate(c5, bad));
  DpCertificate wrong_size{3, {VertexSet::of(3, {0}), VertexSet::of(3, {0}), VertexSet::full(3)}};
  EXPECT_FALSE(verify_dp_certificate(path_graph(3), wrong_size));
}

TEST(SdpOrder, Examples) {
  const auto k4 = sdp_order(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->order, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(sdp_order(cycle_graph(5)));
  const auto p4 = sdp_order(path_graph(4));
  ASSERT_TRUE(p4);
  EXPECT_EQ(p4->order, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(verify_sdp_order(path_graph(4), *p4));
}

TEST(SdpOrder, PathOrdersMatchExhaustiveCheck) {
  const Graph p4 = path_graph(4);
  std::vector<Vertex> perm{0, 1, 2, 3};
  int valid = 0;
  do {
    // Each prefix deletion must leave a subpath, i.e. delete only endpoints.
    oracle::Mask left = oracle::full(4);
    bool ok = true;
    for (Vertex v : perm) {
      left &= ~oracle::bit(v);
      ok = ok && oracle::isometric(p4, left);
    }
    EXPECT_EQ(verify_sdp_order(p4, SdpOrder{perm}), ok);
    valid += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(valid, 8);
}

TEST(SdpOrder, MatchesOracleAndChainReading) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      const auto order = sdp_order(g);
      const bool expected = oracle::sdp(g);
      EXPECT_EQ(order.has_value(), expected);
      EXPECT_EQ(oracle::sdp_chain(g), expected);
      if (order) EXPECT_TRUE(verify_sdp_order(g, *order));
    }
  }
}

TEST(DeletionSets, Examples) {
  const auto k3 = deletion_sets(complete_graph(3), 3);
  EXPECT_EQ(k3.sets.size(), 8u);
  EXPECT_EQ(k3.sizes, (std::set<std::size_t>{0, 1, 2, 3}));

  const auto c5 = deletion_sets(cycle_graph(5), 5);
  EXPECT_EQ(c5.sizes, (std::set<std::size_t>{0, 2, 3, 4, 5}));

  const auto p3 = deletion_sets(path_graph(3), 3);
  std::vector<oracle::Mask> masks;
  for (const auto& a : p3.sets) masks.push_back(oracle::to_mask(a));
  EXPECT_EQ(masks, (std::vector<oracle::Mask>{0b000, 0b001, 0b100, 0b011, 0b101, 0b110, 0b111}));

  const auto capped = deletion_sets(cycle_graph(5), 1);
  EXPECT_EQ(capped.sizes, std::set<std::size_t>{0});
}

TEST(DeletionSets, MatchNaiveImplementation) {
  std::mt19937 rng(24);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = oracle::random_connected_graph(rng, n, 0.3);
    std::vector<oracle::Mask> got;
    for (const auto& a : deletion_sets(g, n).sets) got.push_back(oracle::to_mask(a));
    auto expected = oracle::deletion_sets(g);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(SearchOrder, LargeHostsAreRejected) {
  EXPECT_THROW(ndp_set(path_graph(65)), PreconditionError);
  EXPECT_THROW(ndp_set(empty_graph(3)), PreconditionError);
}
