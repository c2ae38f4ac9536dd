#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "ordpat/clique_reduce.hpp"

using namespace ordpat;
using namespace testing_support;

namespace {

TEST(Reduce, TriangleOnK3) {
  auto lg = reduce_to_clique(generate_gnm(3, 3, 0), catalog_pattern(catalog::kTriangle));
  EXPECT_EQ(lg.vertex_count(), 9u);
  EXPECT_TRUE(lg.adjacent(lg.id(1, 1), lg.id(2, 2)));
  EXPECT_TRUE(lg.adjacent(lg.id(2, 2), lg.id(3, 3)));
  EXPECT_TRUE(lg.adjacent(lg.id(1, 1), lg.id(3, 3)));
  auto w = find_layered_clique(lg);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::vector<Vertex>{1, 2, 3}));
}

TEST(Reduce, ForbiddenPairBlocksEdge) {
  const Edge e[] = {{1, 2}};
  auto lg = reduce_to_clique(OrderedGraph::from_edges(2, e), Pattern(2, {}, {{1, 2}}));
  for (const auto& x : lg.edges()) EXPECT_FALSE(lg.layer(x.u) == 1 && lg.layer(x.v) == 2);
}

TEST(Reduce, Structure) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    auto g = random_small_graph(rng, 2, 8);
    auto p = random_pattern(2 + static_cast<int>(rng() % 3), rng, 0.3, 0.3);
    auto lg = reduce_to_clique(g, p);
    for (const auto& e : lg.edges()) {
      ASSERT_NE(lg.layer(e.u), lg.layer(e.v));
      ASSERT_LT(lg.layer(e.u), lg.layer(e.v));
      ASSERT_LT(lg.origin(e.u), lg.origin(e.v));
    }
  }
}

TEST(Clique, EmptyGraph) {
  EXPECT_FALSE(find_layered_clique(reduce_to_clique(OrderedGraph::from_edges(5, {}), catalog_pattern(catalog::kTriangle))));
}

TEST(Clique, OracleRandom) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 400; ++t) {
    auto g = random_small_graph(rng, 1, 14);
    auto p = random_pattern(1 + static_cast<int>(rng() % 4), rng, 0.35, 0.35);
    auto r = detect_via_clique(g, p);
    auto o = brute_detect(g, p);
    ASSERT_EQ(r.found, o.found);
    // both searches return the lexicographically first witness
    ASSERT_EQ(r.witness, o.witness);
  }
}

TEST(Clique, CliqueIffRealization) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto g = random_small_graph(rng, 4, 8);
    auto p = random_pattern(3, rng, 0.4, 0.3);
    auto lg = reduce_to_clique(g, p);
    brute_enumerate(g, p, [&](std::span<const Vertex> x) {
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) EXPECT_TRUE(lg.adjacent(lg.id(x[i], i + 1), lg.id(x[j], j + 1)));
      return true;
    });
  }
}

TEST(Clique, SparsePathMatchesDense) {
  // above the dense limit the search runs on the neighbor lists
  auto g = generate_gnm(kDenseReductionLimit + 100, 40000, 6);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 4; ++t) {
    auto p = random_pattern(3, rng, 0.5, 0.2);
    auto r = detect_via_clique(g, p);
    EXPECT_TRUE(witness_ok(g, p, r));
  }
  EXPECT_TRUE(detect_via_clique(g, Pattern(3, {{1, 2}, {2, 3}})).found);
}

TEST(Render, Header) {
  auto text = render_layered_graph(reduce_to_clique(generate_gnm(3, 3, 0), catalog_pattern(catalog::kTriangle)));
  auto g = parse_ordered_graph(text);
  EXPECT_EQ(g.n(), 9u);
  EXPECT_EQ(g.m(), 9u);
}

}  // namespace
