#pragma once

#include <vector>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

enum class NestRelation { SideBySide, Nested };
enum class NestClass { None, Left, Right, Centered };
enum class Direction { Forward, Backward };

/// Nesting structure of the mandatory edges of a positive outerplanar forest.
struct NestingAnalysis {
  std::vector<PatternEdge> edges;  // lexicographic
  /// relation[x][y]: one of the two edges lies inside the other.
  std::vector<std::vector<NestRelation>> relation;
  /// cls[r][x]: how edge x sits inside reference edge r (None if it does
  /// not). Left/right: joined to the left/right endpoint of r by a path
  /// avoiding r; centered: joined to neither.
  std::vector<std::vector<NestClass>> cls;
  std::size_t lome = 0;  // index of the leftmost-outermost edge
  std::size_t rome = 0;  // index of the rightmost-outermost edge
};

/// Throws PreconditionViolated naming the failed property unless `p` is
/// positive, outerplanar and acyclic.
void require_positive_outerplanar_forest(const Pattern& p);

NestingAnalysis analyze_nesting(const Pattern& p);

/// Forward: m[u] is the smallest position of the last pattern vertex over
/// realizations mapping the first vertex to u (n+1 if none); best[u] is the
/// minimum of m over u' > u. Backward: m[v] is the largest position of the
/// first vertex over realizations mapping the last one to v (0 if none);
/// best[v] is the maximum over v' < v. Index 0 and n+1 are padding.
struct BoundaryArrays {
  Direction direction = Direction::Forward;
  std::vector<Vertex> m;
  std::vector<Vertex> best;
};

BoundaryArrays compute_boundaries(const Pattern& p, const OrderedGraph& g, Direction d);

/// Pattern-side preprocessing: for every sub-interval [a, b] of the
/// pattern, the split used by the forward and backward recursions.
struct ForestPlan {
  struct Split {
    int fwd_j = 0, fwd_s = 0;  // largest neighbor j of a in (a, b], first vertex joined to j
    int bwd_i = 0, bwd_t = 0;  // smallest neighbor i of b in [a, b), last vertex joined to i
  };
  int k = 0;
  std::vector<Split> splits;
  /// Dense number of each reachable (interval, direction), -1 elsewhere.
  std::vector<int> ids;
  int states = 0;

  explicit ForestPlan(const Pattern& p);
  std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a) * (k + 1) + b; }
  const Split& at(int a, int b) const { return splits[slot(a, b)]; }
  int state(int a, int b, Direction d) const { return ids[slot(a, b) * 2 + (d == Direction::Forward ? 0 : 1)]; }
};

/// Linear in n + m for a fixed pattern (each of the O(k) sub-intervals of the
/// pattern costs one pass over the edges).
DetectionReport detect_forest(const OrderedGraph& g, const Pattern& p);
/// Same, reusing the pattern preprocessing across graphs.
DetectionReport detect_forest(const OrderedGraph& g, const ForestPlan& plan);

}  // namespace ordpat
