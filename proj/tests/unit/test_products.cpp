#include <gtest/gtest.h>

#include <random>

#include "modlex/errors.hpp"
#include "modlex/metric.hpp"
#include "modlex/products.hpp"
#include "oracles.hpp"

using namespace modlex;

namespace {

GraphFamily fig1_family() {
  return GraphFamily(path_graph(3), {cycle_graph(5), complete_graph(3), complete_graph(2)});
}

GraphFamily random_family(std::mt19937& rng, std::size_t max_base, std::size_t max_component,
                          bool connected_base = true) {
  const std::size_t n = 2 + rng() % (max_base - 1);
  Graph base = connected_base ? oracle::random_connected_graph(rng, n, 0.3)
                              : oracle::random_graph(rng, n, 0.3);
  std::vector<Graph> components;
  for (std::size_t v = 0; v < n; ++v) {
    components.push_back(oracle::random_graph(rng, 1 + rng() % max_component, 0.5));
  }
  return GraphFamily(std::move(base), std::move(components));
}

}  // namespace

TEST(GraphFamily, Validation) {
  EXPECT_THROW(GraphFamily(path_graph(3), {complete_graph(1)}), PreconditionError);
  EXPECT_THROW(GraphFamily(path_graph(2), {complete_graph(1), Graph()}), PreconditionError);
  const auto f = fig1_family();
  EXPECT_EQ(f.sizes(), (std::vector<std::size_t>{5, 3, 2}));
  EXPECT_EQ(f.total_order(), 10u);
}

TEST(LexProduct, FigureOneCounts) {
  const auto p = generalized_lex_product(fig1_family());
  EXPECT_EQ(p.graph.order(), 10u);
  EXPECT_EQ(p.graph.size(), 30u);
  EXPECT_EQ(p.vertex_map[5], (ProductVertex{1, 0}));
  EXPECT_EQ(p.id_of(2, 1), 9u);
  EXPECT_EQ(p.block(1).members(), (std::vector<Vertex>{5, 6, 7}));
  EXPECT_EQ(p.graph.label(9), "(2,1)");
}

TEST(LexProduct, Examples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(are_isomorphic(generalized_lex_product(GraphFamily::constant(c5, complete_graph(1))).graph, c5));
  std::vector<Graph> fig2(5, complete_graph(1));
  fig2[0] = complete_graph(2);
  EXPECT_EQ(generalized_lex_product(GraphFamily(c5, fig2)).graph.order(), 6u);
  EXPECT_EQ(lex_product(complete_graph(2), complete_graph(2)).graph, complete_graph(4));
  const auto c5k2 = lex_product(c5, complete_graph(2));
  EXPECT_EQ(c5k2.graph.order(), 10u);
  EXPECT_EQ(c5k2.graph.size(), 25u);
}

TEST(LexProduct, MatchesDefinitionAndConstantFamily) {
  std::mt19937 rng(41);
  for (int round = 0; round < 100; ++round) {
    const auto f = random_family(rng, 6, 4);
    EXPECT_EQ(generalized_lex_product(f).graph,
              oracle::lex_product_by_definition(f.base(), f.components()));
    const Graph h = oracle::random_graph(rng, 1 + rng() % 4, 0.5);
    const auto constant = generalized_lex_product(GraphFamily::constant(f.base(), h));
    const auto plain = lex_product(f.base(), h);
    EXPECT_EQ(constant.graph, plain.graph);
    EXPECT_EQ(constant.vertex_map, plain.vertex_map);
  }
}

TEST(LexProduct, ConnectedIffBaseConnected) {
  std::mt19937 rng(42);
  EXPECT_THROW(generalized_lex_product(GraphFamily::constant(empty_graph(2), complete_graph(2))),
               PreconditionError);
  for (int round = 0; round < 200; ++round) {
    const auto f = random_family(rng, 6, 3, false);
    const auto p = generalized_lex_product(f, BaseConnectivity::kAllowDisconnected);
    EXPECT_EQ(is_connected(p.graph), is_connected(f.base()));
  }
}

TEST(CartesianProduct, Examples) {
  EXPECT_TRUE(are_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)).graph,
                             cycle_graph(4)));
  const auto grid = cartesian_product(path_graph(2), path_graph(3));
  EXPECT_EQ(grid.graph.order(), 6u);
  EXPECT_EQ(grid.graph.size(), 7u);
  EXPECT_EQ(grid.id_of(1, 2), 5u);
  EXPECT_EQ(grid.kind, ProductKind::kCartesian);
}

TEST(CartesianProduct, DistancesAdd) {
  std::mt19937 rng(43);
  for (int round = 0; round < 60; ++round) {
    const Graph g = oracle::random_connected_graph(rng, 1 + rng() % 5, 0.3);
    const Graph h = oracle::random_connected_graph(rng, 1 + rng() % 5, 0.3);
    const auto p = cartesian_product(g, h);
    EXPECT_EQ(p.graph, oracle::cartesian_by_definition(g, h));
    const auto dp = oracle::floyd(p.graph);
    const auto dg = oracle::floyd(g);
    const auto dh = oracle::floyd(h);
    for (Vertex a = 0; a < p.graph.order(); ++a) {
      for (Vertex b = 0; b < p.graph.order(); ++b) {
        const auto [g1, h1] = p.vertex_map[a];
        const auto [g2, h2] = p.vertex_map[b];
        EXPECT_EQ(dp[a][b], dg[g1][g2] + dh[h1][h2]);
      }
    }
  }
}

TEST(ProjectPi, Examples) {
  const auto f = fig1_family();
  const auto p = generalized_lex_product(f);
  EXPECT_EQ(project_pi(p, VertexSet::of(10, {0, 2})).members(), std::vector<Vertex>{0});
  EXPECT_EQ(project_pi(p, VertexSet::of(10, {1, 6, 9})).members(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(project_pi(p, VertexSet(10)).empty());
  EXPECT_THROW(project_pi(cartesian_product(path_graph(2), path_graph(2)), VertexSet(4)),
               PreconditionError);
}

TEST(LexDistance, Examples) {
  const auto f = fig1_family();
  EXPECT_EQ(lex_distance(f, {0, 0}, {0, 2}), 2u);
  EXPECT_EQ(lex_distance(f, {0, 0}, {0, 1}), 1u);
  EXPECT_EQ(lex_distance(f, {1, 0}, {1, 2}), 1u);
  for (Vertex x = 0; x < 5; ++x) {
    for (Vertex y = 0; y < 2; ++y) EXPECT_EQ(lex_distance(f, {0, x}, {2, y}), 2u);
  }
  EXPECT_EQ(lex_distance(f, {2, 1}, {2, 1}), 0u);
}

TEST(LexDistance, AgreesWithBfs) {
  std::mt19937 rng(44);
  for (int round = 0; round < 100; ++round) {
    const auto f = random_family(rng, 6, 4);
    const auto p = generalized_lex_product(f);
    const auto d = oracle::floyd(p.graph);
    for (Vertex a = 0; a < p.graph.order(); ++a) {
      for (Vertex b = 0; b < p.graph.order(); ++b) {
        EXPECT_EQ(static_cast<int>(lex_distance(f, p.vertex_map[a], p.vertex_map[b])), d[a][b]);
      }
    }
  }
}

TEST(GeodesicLifting, LiftedPathIsGeodesicIffBasePathIs) {
  std::mt19937 rng(45);
  for (int round = 0; round < 300; ++round) {
    const auto f = random_family(rng, 7, 3);
    const auto p = generalized_lex_product(f);
    const auto dg = oracle::floyd(f.base());
    const auto dp = oracle::floyd(p.graph);
    // Random simple path in the base, then one vertex of each block along it.
    std::vector<Vertex> walk{static_cast<Vertex>(rng() % f.base().order())};
    VertexSet used = VertexSet::of(f.base().order(), {walk.front()});
    const std::size_t wanted = 1 + rng() % 4;
    while (walk.size() <= wanted) {
      const auto next = (neighborhood(f.base(), walk.back()) - used).members();
      if (next.empty()) break;
      walk.push_back(next[rng() % next.size()]);
      used.insert(walk.back());
    }
    const std::size_t steps = walk.size() - 1;
    std::vector<Vertex> lifted;
    for (Vertex u : walk) lifted.push_back(p.id_of(u, rng() % f.component(u).order()));
    bool lifted_is_path = true;
    for (std::size_t i = 0; i + 1 < lifted.size(); ++i) {
      lifted_is_path = lifted_is_path && p.graph.adjacent(lifted[i], lifted[i + 1]);
    }
    ASSERT_TRUE(lifted_is_path);
    const bool base_geodesic = dg[walk.front()][walk.back()] == static_cast<int>(steps);
    const bool lifted_geodesic = dp[lifted.front()][lifted.back()] == static_cast<int>(steps);
    EXPECT_EQ(base_geodesic, lifted_geodesic);
  }
}
