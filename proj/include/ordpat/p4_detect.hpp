#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

/// Per-edge neighbor lookups. Edge index t is the t-th pair (i, j), i < j,
/// in (i, j) order. Absent values are 0.
struct EdgeTables {
  std::vector<Edge> edges;
  std::vector<Vertex> next_of_i;  // e+: smallest neighbor of i above j
  std::vector<Vertex> prev_of_i;  // e-: largest neighbor of i below j
  std::vector<Vertex> next_of_j;  // +e: smallest neighbor of j above i
  std::vector<Vertex> prev_of_j;  // -e: largest neighbor of j below i
  // indexed by vertex
  std::vector<Vertex> min_pred, max_pred, min_succ, max_succ;
};

EdgeTables build_edge_tables(const OrderedGraph& g);

inline constexpr int kP4Variants = 8;

/// The positive pattern whose mandatory pairs form the path of `variant`
/// (1..8), mirrored on request. Variants:
///   1 {12,23,34}  2 {12,23,14}  3 {12,34,13}  4 {23,24,13}
///   5 {12,34,14}  6 {14,13,23}  7 {12,24,13}  8 {14,13,24}
Pattern p4_pattern(int variant, bool mirrored = false);

/// If `p` is one of the 12 positive P4 orderings, its (variant, mirrored).
std::optional<std::pair<int, bool>> p4_variant_of(const Pattern& p);

/// One scan over the edges evaluating a constant-time test on the middle
/// edge of the path. Mirrored variants run on the mirrored graph.
DetectionReport detect_positive_p4(const OrderedGraph& g, int variant, bool mirrored = false,
                                   ScanStats* stats = nullptr);

}  // namespace ordpat
