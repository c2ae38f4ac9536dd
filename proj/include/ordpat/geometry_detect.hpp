#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

// Four-vertex patterns with mandatory pairs (1,3), (2,4) and a forbidden
// subset of a=(1,2), b=(2,3), c=(3,4), d=(1,4).

/// Crossing edges, by a parenthesis scan. O(n + m).
DetectionReport detect_p_empty(const OrderedGraph& g, ScanStats* stats = nullptr);
/// Forbidden a. O(n + m).
DetectionReport detect_p_a(const OrderedGraph& g, ScanStats* stats = nullptr);
/// Forbidden b. O(n + m).
DetectionReport detect_p_b(const OrderedGraph& g, ScanStats* stats = nullptr);
/// Forbidden c: forbidden a on the mirrored graph.
DetectionReport detect_p_c(const OrderedGraph& g, ScanStats* stats = nullptr);
/// Forbidden a and b. O(n (n + m)).
DetectionReport detect_p_ab(const OrderedGraph& g, ScanStats* stats = nullptr);
/// Forbidden b and c: forbidden a and b on the mirrored graph.
DetectionReport detect_p_bc(const OrderedGraph& g, ScanStats* stats = nullptr);

/// The forbidden set (canonical "abcd" order) if `p` belongs to the family.
std::optional<std::string> geometry_member(const Pattern& p);

/// True for the members with a dedicated detector: "", a, b, c, ab, bc.
bool geometry_supported(std::string_view forbidden);

/// Dispatches on the forbidden set. Throws InvalidArgument for members
/// without a dedicated detector.
DetectionReport detect_geometry(const OrderedGraph& g, std::string_view forbidden, ScanStats* stats = nullptr);

}  // namespace ordpat
