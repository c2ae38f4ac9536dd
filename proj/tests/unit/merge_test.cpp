#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

#include "../support.hpp"
#include "ordpat/merge_engine.hpp"

using namespace ordpat;
using namespace testing_support;

namespace {

VertexMask bits(std::initializer_list<int> xs) {
  VertexMask m = 0;
  for (int x : xs) m |= VertexMask{1} << (x - 1);
  return m;
}

MergeNode leaf(int a, int b, VertexMask anchors) {
  MergeNode n;
  n.kind = MergeNodeKind::Leaf;
  n.vertices = bits({a, b});
  n.anchors = anchors;
  n.edges = {{a, b, PairClass::Mandatory}};
  return n;
}

MergeNode merge(const MergeTree& t, int l, int r, VertexMask anchors) {
  MergeNode n;
  n.kind = MergeNodeKind::Merge;
  n.left = l;
  n.right = r;
  n.vertices = t.nodes[l].vertices | t.nodes[r].vertices;
  n.anchors = anchors;
  n.edges = t.nodes[l].edges;
  n.edges.insert(n.edges.end(), t.nodes[r].edges.begin(), t.nodes[r].edges.end());
  std::sort(n.edges.begin(), n.edges.end(), [](auto& x, auto& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
  return n;
}

// Three anchored edges joined by two merges, every vertex anchored.
MergeTree triangle_tree(VertexMask first_leaf_anchors) {
  MergeTree t;
  t.k = 3;
  const VertexMask all = bits({1, 2, 3});
  t.nodes.push_back(leaf(1, 2, first_leaf_anchors));
  t.nodes.push_back(leaf(2, 3, bits({2, 3})));
  t.nodes.push_back(leaf(1, 3, bits({1, 3})));
  t.nodes.push_back(merge(t, 0, 1, all));
  t.nodes.push_back(merge(t, 3, 2, all));
  t.root = 4;
  return t;
}

bool mentions(const TreeDiagnostics& d, const std::string& what) {
  for (const auto& p : d.problems)
    if (p.find(what) != std::string::npos) return true;
  return false;
}

TEST(Validate, TriangleConstruction) {
  auto t = triangle_tree(bits({1, 2}));
  auto d = validate_merge_tree(t, catalog_pattern(catalog::kTriangle));
  EXPECT_TRUE(d.ok) << (d.problems.empty() ? "" : d.problems.front());
  EXPECT_EQ(t.width(), 3);
}

TEST(Validate, SharedVertexMustBeAnchored) {
  auto t = triangle_tree(bits({1}));
  auto d = validate_merge_tree(t, catalog_pattern(catalog::kTriangle));
  EXPECT_FALSE(d.ok);
  EXPECT_TRUE(mentions(d, "item (c)"));
}

TEST(Validate, SingleLeaf) {
  MergeTree t;
  t.k = 2;
  t.nodes.push_back(leaf(1, 2, bits({1, 2})));
  t.root = 0;
  EXPECT_TRUE(validate_merge_tree(t, Pattern(2, {{1, 2}})).ok);
  EXPECT_FALSE(validate_merge_tree(t, Pattern(2, {}, {{1, 2}})).ok);
}

TEST(Validate, RootMustMatchTarget) {
  auto t = triangle_tree(bits({1, 2}));
  EXPECT_FALSE(validate_merge_tree(t, flat_cycle(4)).ok);
}

TEST(Outerplanar, FlatCycleFour) {
  auto p = flat_cycle(4);
  auto t = build_outerplanar_tree(p);
  EXPECT_TRUE(validate_merge_tree(t, p).ok);
  EXPECT_EQ(t.width(), 2);
  EXPECT_EQ(t.nodes[t.root].kind, MergeNodeKind::Merge);
}

TEST(Outerplanar, SingleEdge) {
  auto p = Pattern(2, {{1, 2}});
  auto t = build_outerplanar_tree(p);
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_EQ(t.nodes[0].kind, MergeNodeKind::Leaf);
  EXPECT_EQ(t.width(), 2);
}

TEST(Outerplanar, RejectsCrossing) {
  EXPECT_THROW(build_outerplanar_tree(Pattern(4, {{1, 3}, {2, 4}})), Error);
}

TEST(Outerplanar, RandomWidthTwo) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int t = 0; t < 3000 && checked < 400; ++t) {
    auto p = random_pattern(2 + static_cast<int>(rng() % 7), rng, 0.3, 0.2);
    if (!classify(p).outerplanar || p.decided().empty()) continue;
    ++checked;
    auto tree = build_outerplanar_tree(p);
    auto d = validate_merge_tree(tree, p);
    ASSERT_TRUE(d.ok) << render_pattern(p) << d.problems.front();
    ASSERT_LE(tree.width(), 2);
  }
  EXPECT_GT(checked, 100);
}

TEST(DistOut, Examples) {
  EXPECT_EQ(dist_out(flat_cycle(5)), 0);
  std::vector<PatternEdge> removed;
  EXPECT_EQ(dist_out(Pattern(4, {{1, 3}, {2, 4}}), &removed), 1);
  ASSERT_EQ(removed.size(), 1u);
  auto t = build_bounded_tree(Pattern(4, {{1, 3}, {2, 4}}));
  EXPECT_TRUE(validate_merge_tree(t, Pattern(4, {{1, 3}, {2, 4}})).ok);
  EXPECT_LE(t.width(), 4);
}

TEST(Bounded, OuterplanarHasWidthTwo) {
  auto p = flat_cycle(6);
  EXPECT_EQ(build_bounded_tree(p).width(), 2);
}

TEST(Bounded, RandomWidthBound) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto p = random_pattern(2 + static_cast<int>(rng() % 5), rng, 0.35, 0.2);
    if (p.decided().empty()) continue;
    auto tree = build_bounded_tree(p);
    auto d = validate_merge_tree(tree, p);
    ASSERT_TRUE(d.ok) << render_pattern(p) << d.problems.front();
    ASSERT_LE(tree.width(), 2 * dist_out(p) + 2);
  }
}

TEST(ExactWidth, NeverAboveConstructions) {
  EXPECT_LE(exact_merge_width(flat_cycle(4)), 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto p = random_pattern(2 + static_cast<int>(rng() % 3), rng, 0.4, 0.2);
    if (p.decided().empty()) continue;
    EXPECT_LE(exact_merge_width(p), build_bounded_tree(p).width());
  }
  EXPECT_THROW(exact_merge_width(flat_cycle(6)), Error);
}

TEST(Dump, Shape) {
  auto s = dump_tree(build_outerplanar_tree(Pattern(2, {{1, 2}})));
  EXPECT_EQ(s.rfind("(leaf 1-2 M", 0), 0u);
  auto c = dump_tree(build_outerplanar_tree(flat_cycle(4)));
  EXPECT_NE(c.find("(merge"), std::string::npos);
}

TEST(Dp, Examples) {
  auto r = run_dp(generate_gnm(3, 3, 0), build_bounded_tree(flat_cycle(3)));
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.witness, (std::vector<Vertex>{1, 2, 3}));
  const Edge c4[] = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  auto g = OrderedGraph::from_edges(4, c4);
  r = run_dp(g, build_bounded_tree(flat_cycle(4)));
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.witness, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(r.engine, "merge");
}

TEST(Dp, Caps) {
  auto g = generate_gnm(6, 6, 1);
  DpOptions o;
  o.width_cap = 1;
  try {
    run_dp(g, build_bounded_tree(flat_cycle(4)), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WidthCapExceeded);
  }
  auto bad = triangle_tree(bits({1}));
  try {
    run_dp(g, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTree);
  }
}

TEST(Dp, FlatCyclesMatchOracle) {
  std::mt19937_64 rng(6);
  for (int k = 3; k <= 6; ++k) {
    auto p = flat_cycle(k);
    auto tree = build_bounded_tree(p);
    for (int t = 0; t < 60; ++t) {
      auto g = random_small_graph(rng, 1, 18);
      auto r = run_dp(g, tree);
      ASSERT_EQ(r.found, oracle_found(g, p)) << k << "\n" << render_ordered_graph(g);
      ASSERT_TRUE(witness_ok(g, p, r));
    }
  }
}

TEST(Dp, RandomPatternsMatchOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    auto p = random_pattern(1 + static_cast<int>(rng() % 5), rng, 0.3, 0.3);
    auto g = random_small_graph(rng, 1, 11);
    auto r = detect_via_merge(g, p);
    ASSERT_EQ(r.found, oracle_found(g, p)) << render_pattern(p) << render_ordered_graph(g);
    ASSERT_TRUE(witness_ok(g, p, r));
  }
}

TEST(Dp, TwoTreesAgree) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 150; ++t) {
    auto p = random_pattern(3 + static_cast<int>(rng() % 3), rng, 0.3, 0.2);
    if (!classify(p).outerplanar || p.decided().empty()) continue;
    auto g = random_small_graph(rng, 1, 10);
    auto via_outer = run_dp(g, build_outerplanar_tree(p)).found;
    ASSERT_EQ(via_outer, run_dp(g, build_bounded_tree(p)).found);
    ASSERT_EQ(via_outer, oracle_found(g, p));
  }
}

// Each node table must be exactly the set of anchor projections of the
// node's realizations.
TEST(Dp, TablesAreExact) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    auto p = random_pattern(3 + static_cast<int>(rng() % 3), rng, 0.35, 0.25);
    if (p.decided().empty()) continue;
    auto tree = build_bounded_tree(p);
    auto g = random_small_graph(rng, 3, 8);
    auto res = run_dp_tables(g, tree);
    for (int id = 0; id < static_cast<int>(tree.nodes.size()); ++id) {
      const auto& node = tree.nodes[id];
      auto sub = node_pattern(tree, id);
      std::vector<int> anchor_rank;
      for (int a : node_anchors(tree, id)) {
        const VertexMask below = (VertexMask{1} << (a - 1)) - 1;
        anchor_rank.push_back(std::popcount(node.vertices & below));
      }
      std::set<std::vector<Vertex>> want;
      OracleOptions o;
      o.override_cap = true;
      brute_enumerate(g, sub, [&](std::span<const Vertex> x) {
        std::vector<Vertex> proj;
        for (int r : anchor_rank) proj.push_back(x[r]);
        want.insert(proj);
        return true;
      }, o);
      const auto& tab = res.tables[id].tuples;
      std::set<std::vector<Vertex>> got(tab.begin(), tab.end());
      ASSERT_EQ(got, want) << "node " << id << " of\n" << dump_tree(tree) << render_ordered_graph(g);
    }
  }
}

}  // namespace
