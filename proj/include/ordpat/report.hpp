#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordpat/graph.hpp"

namespace ordpat {

/// Outcome of a detection. When `found`, `witness` holds the strictly
/// increasing graph positions realizing the pattern (pattern vertex i maps to
/// witness[i-1]).
struct DetectionReport {
  bool found = false;
  std::vector<Vertex> witness;
  std::string engine;
  /// For family detection: index of the pattern that was found.
  std::optional<std::size_t> pattern_index;

  static DetectionReport not_found(std::string engine) { return {false, {}, std::move(engine), std::nullopt}; }
  static DetectionReport hit(std::vector<Vertex> w, std::string engine) {
    return {true, std::move(w), std::move(engine), std::nullopt};
  }
};

}  // namespace ordpat
