#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

/// Detects any k = 3 pattern. Mirrored patterns run on the mirrored graph
/// and the witness is mapped back. Linear time except for Triangle,
/// co-Triangle, Comparability and co-Comparability.
DetectionReport detect_three(const OrderedGraph& g, const Pattern& p, ScanStats* stats = nullptr);

/// Catalog ids handled by `condition_check` (the canonical easy patterns).
bool is_condition_pattern(int catalog_id);

/// One pass over the neighbor lists testing the per-vertex condition whose
/// failure exhibits the pattern. `catalog_id` must be one of the 12 easy
/// canonical patterns.
DetectionReport condition_check(const OrderedGraph& g, int catalog_id, ScanStats* stats = nullptr);

/// Chordal: a < b < c with ac, bc edges and ab a non-edge. Compares N^-(i)
/// minus its largest element j against N^-(j), batching the comparisons per
/// j so that every N^-(j) is scanned once.
DetectionReport detect_chordal(const OrderedGraph& g, ScanStats* stats = nullptr);

/// co-Chordal: a < b < c with ab an edge and ac, bc non-edges. Works on the
/// implicit complement.
DetectionReport detect_cochordal(const OrderedGraph& g, ScanStats* stats = nullptr);

/// A graph class defined by a finite family of forbidden three-vertex
/// patterns.
struct ClassFamily {
  const char* name;
  std::vector<int> catalog_ids;
};

std::span<const ClassFamily> class_families();

/// Runs `detect_three` for every family member in order.
DetectionReport detect_three_family(const OrderedGraph& g, std::span<const int> catalog_ids);

}  // namespace ordpat
