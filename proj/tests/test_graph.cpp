#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace thinness;

TEST(VertexSet, BasicOperations) {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(63));
  EXPECT_FALSE(s.contains(500));
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 64, 129}));
  VertexSet t(130);
  t.insert(64);
  EXPECT_TRUE(s.intersects(t));
  s &= t;
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{64}));
  s.erase(64);
  EXPECT_TRUE(s.empty());
}

TEST(Graph, BuilderRejectsBadEdges) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  b.add_edge(0, 1).add_edge(1, 0);
  EXPECT_EQ(std::move(b).build().edge_count(), 1u);
}

TEST(Graph, NeighbourhoodsAndEdges) {
  const Graph g(4, {{2, 1}, {0, 1}, {3, 2}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(g.neighbors(1).to_vector(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(g.closed_neighbors(1).to_vector(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(g.degree(3), 1u);
  EXPECT_EQ(g, path(4));
}

TEST(Crown, SmallCases) {
  EXPECT_EQ(crown(1).graph.size(), 2u);
  EXPECT_EQ(crown(1).graph.edge_count(), 0u);

  const auto c2 = crown(2);
  const auto& lab = c2.labeling;
  EXPECT_EQ(c2.graph.edges(), (std::vector<Edge>{{lab.v(1), lab.v_prime(2)}, {lab.v(2), lab.v_prime(1)}}));
  EXPECT_TRUE(oracle::isomorphic(c2.graph, matching_nk2(2)));

  const auto c3 = crown(3);
  EXPECT_EQ(c3.graph.edge_count(), 6u);
  EXPECT_TRUE(oracle::isomorphic(c3.graph, cycle(6)));
  EXPECT_THROW(crown(0), std::invalid_argument);
}

TEST(Crown, RegularBipartiteWithMirrors) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto [g, lab] = crown(n);
    ASSERT_EQ(g.size(), 2 * n);
    for (Vertex v = 0; v < g.size(); ++v) {
      EXPECT_EQ(g.degree(v), n - 1);
      EXPECT_EQ(lab.mirror(lab.mirror(v)), v);
      EXPECT_NE(lab.side(v), lab.side(lab.mirror(v)));
      EXPECT_FALSE(g.adjacent(v, lab.mirror(v)));
      g.neighbors(v).for_each([&](Vertex w) { EXPECT_NE(lab.side(v), lab.side(w)); });
    }
    EXPECT_EQ(lab.v(1), 0u);
    EXPECT_EQ(lab.v_prime(1), n);
  }
}

TEST(Grid, CountsAndNumbering) {
  EXPECT_EQ(grid(1, 1).graph.edge_count(), 0u);
  EXPECT_TRUE(oracle::isomorphic(grid(2, 2).graph, cycle(4)));
  EXPECT_EQ(grid(3, 3).graph.edge_count(), 12u);
  const auto [g, lab] = grid(3, 5);
  EXPECT_EQ(g.edge_count(), 3u * 4 + 5u * 2);
  EXPECT_EQ(lab.at(2, 3), 7u);
  EXPECT_EQ(lab.coord(7), (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_THROW(grid(0, 3), std::invalid_argument);
}

TEST(Grid, ParityColoringIsProper) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto [g, lab] = grid(n, m);
      for (auto [u, v] : g.edges()) {
        const auto [i, j] = lab.coord(u);
        const auto [k, l] = lab.coord(v);
        EXPECT_NE((i + j) % 2, (k + l) % 2);
        EXPECT_EQ((i > k ? i - k : k - i) + (j > l ? j - l : l - j), 1u);
      }
    }
}

TEST(Operators, Complement) {
  EXPECT_EQ(complement(complete(3)).edge_count(), 0u);
  EXPECT_TRUE(oracle::isomorphic(complement(crown(2).graph), cycle(4)));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph_n(7, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).edge_count() + g.edge_count(), 21u);
  }
}

TEST(Operators, UnionAndJoin) {
  EXPECT_EQ(disjoint_union(complete(1), complete(1)), edgeless(2));
  EXPECT_EQ(join(complete(1), complete(1)), complete(2));
  EXPECT_TRUE(oracle::isomorphic(join(edgeless(2), edgeless(2)), cycle(4)));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph a = oracle::random_graph_n(4, rng), b = oracle::random_graph_n(5, rng);
    const Graph u = disjoint_union(a, b), j = join(a, b);
    EXPECT_EQ(u.size(), 9u);
    EXPECT_EQ(u.edge_count(), a.edge_count() + b.edge_count());
    EXPECT_EQ(j.edge_count(), a.edge_count() + b.edge_count() + 20u);
    EXPECT_TRUE(j.adjacent(0, 4));
    EXPECT_FALSE(u.adjacent(0, 4) && !a.adjacent(0, 4));
  }
}

TEST(Operators, InducedSubgraph) {
  const Graph c4 = cycle(4);
  const std::vector<Vertex> all{0, 1, 2, 3};
  EXPECT_EQ(induced_subgraph(c4, all).graph, c4);
  const std::vector<Vertex> three{3, 0, 1};
  const auto sub = induced_subgraph(c4, three);
  EXPECT_TRUE(oracle::isomorphic(sub.graph, path(3)));
  EXPECT_EQ(sub.to_original, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(sub.from_original[3], std::optional<Vertex>{2});
  EXPECT_FALSE(sub.from_original[2].has_value());

  const auto [g, lab] = crown(3);
  const std::vector<Vertex> s{lab.v(1), lab.v(2), lab.v_prime(3)};
  const auto p = induced_subgraph(g, s);
  EXPECT_EQ(p.graph.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
  const std::vector<Vertex> bad{9};
  EXPECT_THROW(induced_subgraph(g, bad), std::out_of_range);
}

TEST(Generators, StandardFamilies) {
  EXPECT_EQ(complete(1).size(), 1u);
  EXPECT_EQ(complete(5).edge_count(), 10u);
  EXPECT_TRUE(is_complete_graph(complete(4)));
  EXPECT_FALSE(is_complete_graph(path(3)));
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6u);
  EXPECT_EQ(path(4).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(matching_nk2(3).edges(), (std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_THROW(complete(0), std::invalid_argument);
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_THROW(matching_nk2(0), std::invalid_argument);
}
