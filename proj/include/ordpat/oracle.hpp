#pragma once

#include <functional>
#include <span>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

struct OracleOptions {
  /// Largest pattern size accepted without `override_cap`.
  int size_cap = 8;
  bool override_cap = false;
};

/// Reference detector: enumerates increasing k-tuples in lexicographic
/// order, abandoning a prefix as soon as a decided pair among the chosen
/// positions is violated. Returns the lexicographically first witness.
DetectionReport brute_detect(const OrderedGraph& g, const Pattern& p, const OracleOptions& opts = {});

/// Found iff some pattern of the list is found; `pattern_index` names the
/// first one in list order.
DetectionReport brute_detect_family(const OrderedGraph& g, std::span<const Pattern> patterns,
                                    const OracleOptions& opts = {});

/// Calls `visit` on every realization, in lexicographic order. Stops early
/// when `visit` returns false.
void brute_enumerate(const OrderedGraph& g, const Pattern& p,
                     const std::function<bool(std::span<const Vertex>)>& visit, const OracleOptions& opts = {});

}  // namespace ordpat
