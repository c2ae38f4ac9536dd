#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

/// Vertex sets of node labels are bitmasks over the target's positions
/// (bit x-1 for position x), so the merge engine accepts k <= 32.
using VertexMask = std::uint32_t;

inline constexpr int kMaxMergePatternSize = 32;
/// Tuples are stored inline; no node may carry more anchors than this.
inline constexpr int kMaxTupleWidth = 8;

enum class MergeNodeKind { Leaf, VertexCreate, Merge };

/// A node and its anchored label. Positions are those of the target pattern;
/// a label is the pattern induced on `vertices` restricted to `edges`.
struct MergeNode {
  MergeNodeKind kind = MergeNodeKind::Leaf;
  VertexMask vertices = 0;
  VertexMask anchors = 0;
  std::vector<PatternEdge> edges;  // sorted by (a, b)
  // VertexCreate: `left` is the child (-1 creates from the empty pattern),
  // `created` the new position. Merge: `left` and `right`.
  int left = -1;
  int right = -1;
  int created = 0;
};

struct MergeTree {
  int k = 0;
  std::vector<MergeNode> nodes;
  int root = -1;

  /// Largest anchor count over all nodes.
  int width() const;
};

struct TreeDiagnostics {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks every node against its children (edge partition, vertex cover,
/// shared vertices anchored on both sides, anchor persistence, no
/// consecutive vertices split across the sides, passive anchors kept) and the
/// root against `target`.
TreeDiagnostics validate_merge_tree(const MergeTree& t, const Pattern& target);

/// Requires an outerplanar pattern (no two decided pairs cross). Every node
/// has at most two anchors: its leftmost and rightmost vertex.
MergeTree build_outerplanar_tree(const Pattern& p);

/// Fewest decided pairs whose removal leaves an outerplanar pattern. The
/// removed pairs (lexicographically first among the minimum sets) are stored
/// in `removed` when non-null.
int dist_out(const Pattern& p, std::vector<PatternEdge>* removed = nullptr);

/// Outerplanar tree of the remainder with the endpoints of the removed pairs
/// anchored everywhere, merged at the root with a fully anchored tree of the
/// removed pairs. Width <= 2 * dist_out(p) + 2.
MergeTree build_bounded_tree(const Pattern& p);

/// Minimum width over all merge trees, by exhaustive search. k <= 5.
int exact_merge_width(const Pattern& p);

/// Target pattern and anchors of a node label, relabelled to 1..|vertices|.
Pattern node_pattern(const MergeTree& t, int node);

/// Sorted anchor positions of a node.
std::vector<int> node_anchors(const MergeTree& t, int node);

/// S-expression dump: (kind [anchors] children...). Leaves print their pair
/// and class, creations the created position.
std::string dump_tree(const MergeTree& t);

struct DpOptions {
  int width_cap = 6;
};

/// Per-node tables of anchor tuples; tuple values follow increasing anchor
/// position.
struct AnchorTable {
  VertexMask anchors = 0;
  int width = 0;
  std::vector<std::vector<Vertex>> tuples;  // sorted, unique
};

struct DpResult {
  DetectionReport report;
  std::vector<AnchorTable> tables;  // indexed like MergeTree::nodes
};

/// Bottom-up anchor-table dynamic program. Throws WidthCapExceeded when the
/// tree is wider than the cap and InvalidTree when it fails validation.
DetectionReport run_dp(const OrderedGraph& g, const MergeTree& t, const DpOptions& opts = {});

/// Same, keeping every table for inspection.
DpResult run_dp_tables(const OrderedGraph& g, const MergeTree& t, const DpOptions& opts = {});

/// Degenerate patterns first, then the bounded tree.
DetectionReport detect_via_merge(const OrderedGraph& g, const Pattern& p, const DpOptions& opts = {});

}  // namespace ordpat
