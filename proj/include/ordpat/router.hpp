#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

enum class Engine { Auto, Oracle, Three, Clique, Merge, Forest, P4, Geometry };

std::optional<Engine> engine_from_name(std::string_view name);
const char* engine_name(Engine e);

struct DetectOptions {
  Engine engine = Engine::Auto;
  int width_cap = 6;
  /// Pattern size limit of the oracle engine.
  int oracle_cap = 8;
};

/// The engine auto-routing picks for `p`, with a short reason.
std::pair<Engine, std::string> route(const Pattern& p, int width_cap = 6);

/// Runs the requested engine (or the routed one). Patterns with no decided
/// pair are answered directly: found iff n >= k. Throws
/// PreconditionViolated when an explicit engine does not apply to `p`.
DetectionReport detect(const OrderedGraph& g, const Pattern& p, const DetectOptions& opts = {});

}  // namespace ordpat
