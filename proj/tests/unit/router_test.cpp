#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "ordpat/geometry_detect.hpp"
#include "ordpat/p4_detect.hpp"
#include "ordpat/router.hpp"

using namespace ordpat;
using namespace testing_support;

namespace {

TEST(Route, Choices) {
  EXPECT_EQ(route(catalog_pattern(catalog::kChordal)).first, Engine::Three);
  EXPECT_EQ(route(Pattern(5, {{1, 2}, {2, 5}, {3, 4}})).first, Engine::Forest);
  EXPECT_EQ(route(p4_pattern(2)).first, Engine::Forest);  // outerplanar path
  EXPECT_EQ(route(p4_pattern(4)).first, Engine::P4);      // crossing path
  EXPECT_EQ(route(geometry_pattern("ab")).first, Engine::Geometry);
  EXPECT_EQ(route(geometry_pattern("abd")).first, Engine::Merge);
  EXPECT_EQ(route(flat_cycle(5)).first, Engine::Merge);
  EXPECT_EQ(route(flat_cycle(5), 1).first, Engine::Clique);
}

TEST(Route, EngineNames) {
  for (auto e : {Engine::Auto, Engine::Oracle, Engine::Three, Engine::Clique, Engine::Merge, Engine::Forest, Engine::P4,
                 Engine::Geometry})
    EXPECT_EQ(engine_from_name(engine_name(e)), e);
  EXPECT_FALSE(engine_from_name("thre"));
}

TEST(Detect, Degenerate) {
  auto g = OrderedGraph::from_edges(3, {});
  EXPECT_TRUE(detect(g, Pattern(3)).found);
  EXPECT_FALSE(detect(g, Pattern(4)).found);
  EXPECT_TRUE(detect(g, Pattern(1)).found);
  DetectOptions o;
  o.engine = Engine::Merge;
  EXPECT_TRUE(detect(g, Pattern(2), o).found);
}

TEST(Detect, ExplicitEngineMismatch) {
  auto g = generate_gnm(6, 6, 1);
  DetectOptions o;
  o.engine = Engine::Three;
  EXPECT_THROW(detect(g, flat_cycle(4), o), Error);
  o.engine = Engine::Forest;
  EXPECT_THROW(detect(g, flat_cycle(4), o), Error);
  o.engine = Engine::P4;
  EXPECT_THROW(detect(g, flat_cycle(4), o), Error);
  o.engine = Engine::Geometry;
  EXPECT_THROW(detect(g, geometry_pattern("d"), o), Error);
}

// Routing never changes a verdict.
TEST(Detect, AutoMatchesOracle) {
  std::mt19937_64 rng(2024);
  std::vector<Pattern> pool;
  for (int v = 1; v <= kP4Variants; ++v) pool.push_back(p4_pattern(v, v % 2));
  for (auto f : {"", "a", "b", "c", "ab", "bc", "abd"}) pool.push_back(geometry_pattern(f));
  for (int k = 3; k <= 6; ++k) pool.push_back(flat_cycle(k));
  for (int i = 0; i < 200; ++i) {
    Pattern p = i % 2 ? pool[rng() % pool.size()] : random_pattern(1 + static_cast<int>(rng() % 6), rng, 0.3, 0.25);
    auto g = random_small_graph(rng, 1, 11);
    for (Engine e : {Engine::Auto, Engine::Clique, Engine::Merge}) {
      DetectOptions o;
      o.engine = e;
      auto r = detect(g, p, o);
      ASSERT_EQ(r.found, oracle_found(g, p)) << engine_name(e) << "\n" << render_pattern(p) << render_ordered_graph(g);
      ASSERT_TRUE(witness_ok(g, p, r));
    }
  }
}

}  // namespace
