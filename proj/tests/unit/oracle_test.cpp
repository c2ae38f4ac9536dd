#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"

using namespace ordpat;
using namespace testing_support;

namespace {

TEST(Oracle, IntervalWitness) {
  const Edge e[] = {{1, 3}};
  auto r = brute_detect(OrderedGraph::from_edges(3, e), catalog_pattern(catalog::kInterval));
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.witness, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(r.engine, "oracle");
}

TEST(Oracle, LexicographicFirst) {
  auto r = brute_detect(generate_gnm(4, 6, 0), catalog_pattern(catalog::kTriangle));
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.witness, (std::vector<Vertex>{1, 2, 3}));
}

TEST(Oracle, EmptyGraph) {
  auto g = OrderedGraph::from_edges(10, {});
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    auto p = random_pattern(2 + static_cast<int>(rng() % 5), rng, 0.3, 0.3);
    if (p.mandatory().empty()) continue;
    EXPECT_FALSE(brute_detect(g, p).found);
  }
}

TEST(Oracle, SizeCap) {
  auto g = OrderedGraph::from_edges(10, {});
  EXPECT_THROW(brute_detect(g, Pattern(9)), Error);
  OracleOptions o;
  o.override_cap = true;
  EXPECT_TRUE(brute_detect(g, Pattern(9), o).found);
}

TEST(OracleFamily, Examples) {
  auto k3 = generate_gnm(3, 3, 0);
  const Pattern fam[] = {catalog_pattern(catalog::kChordal), catalog_pattern(catalog::kCoChordal)};
  EXPECT_FALSE(brute_detect_family(k3, fam).found);
  EXPECT_FALSE(brute_detect_family(k3, std::span<const Pattern>{}).found);
  const Pattern one[] = {catalog_pattern(catalog::kTriangle), Pattern(1)};
  auto r = brute_detect_family(OrderedGraph::from_edges(1, {}), one);
  EXPECT_TRUE(r.found);
  EXPECT_EQ(r.pattern_index, 1u);
}

TEST(Oracle, WitnessesValidAndWeakeningMonotone) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    auto g = random_small_graph(rng, 1, 10);
    auto p = random_pattern(1 + static_cast<int>(rng() % 5), rng, 0.3, 0.3);
    auto r = brute_detect(g, p);
    ASSERT_TRUE(witness_ok(g, p, r));
    auto dec = p.decided();
    if (dec.empty()) continue;
    auto weak = p;
    const auto& e = dec[rng() % dec.size()];
    weak.set(e.a, e.b, PairClass::Undecided);
    if (r.found) EXPECT_TRUE(brute_detect(g, weak).found);
  }
}

TEST(Oracle, EnumerateMatchesDetect) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto g = random_small_graph(rng, 3, 9);
    auto p = random_pattern(3, rng, 0.4, 0.3);
    std::vector<std::vector<Vertex>> all;
    brute_enumerate(g, p, [&](std::span<const Vertex> x) {
      all.emplace_back(x.begin(), x.end());
      return true;
    });
    auto r = brute_detect(g, p);
    EXPECT_EQ(r.found, !all.empty());
    if (r.found) EXPECT_EQ(r.witness, all.front());
    for (const auto& x : all) EXPECT_TRUE(is_realization(g, x, p));
  }
}

}  // namespace
