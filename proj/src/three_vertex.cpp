#include "ordpat/three_vertex.hpp"

#include <algorithm>
#include <limits>

#include "ordpat/clique_reduce.hpp"
#include "ordpat/oracle.hpp"

namespace ordpat {

namespace {

using namespace catalog;

constexpr std::size_t kComplementCap = 2048;

struct Reads {
  ScanStats* stats;
  void operator()(std::size_t k) const {
    if (stats) stats->add(k);
  }
};

// Smallest position in [lo, hi] missing from the sorted list `s`, whose
// elements all lie in [lo, hi]. Returns 0 if none is missing.
Vertex first_gap(std::span<const Vertex> s, Vertex lo, Vertex hi, const Reads& reads) {
  Vertex expect = lo;
  std::size_t t = 0;
  for (; t < s.size(); ++t) {
    if (s[t] != expect) break;
    ++expect;
  }
  reads(t + 1);
  return expect <= hi ? expect : 0;
}

// Second smallest missing position in [lo, hi]; 0 if fewer than two.
std::pair<Vertex, Vertex> two_gaps(std::span<const Vertex> s, Vertex lo, Vertex hi, const Reads& reads) {
  Vertex found[2] = {0, 0};
  int got = 0;
  Vertex x = lo;
  std::size_t t = 0;
  while (x <= hi && got < 2) {
    if (t < s.size() && s[t] == x) {
      ++t;
    } else {
      found[got++] = x;
    }
    ++x;
  }
  reads(t + 1);
  return {found[0], found[1]};
}

DetectionReport hit(Vertex a, Vertex b, Vertex c, const char* engine) {
  return DetectionReport::hit({a, b, c}, engine);
}

}  // namespace

bool is_condition_pattern(int id) {
  switch (id) {
    case kNoGraph: case kSplit: case kStar: case kCoStar: case kBipartite: case kCoBipartite:
    case kForest: case kCoForest: case kLinearForest: case kCoLinearForest: case kInterval: case kCoInterval:
      return true;
    default:
      return false;
  }
}

DetectionReport condition_check(const OrderedGraph& g, int id, ScanStats* stats) {
  if (!is_condition_pattern(id)) {
    throw Error(ErrorCode::InvalidArgument, "catalog id " + std::to_string(id) + " has no neighborhood condition");
  }
  const char* engine = "three:condition";
  const Reads reads{stats};
  const auto n = static_cast<Vertex>(g.n());
  if (id == kNoGraph) {
    return n >= 3 ? hit(1, 2, 3, engine) : DetectionReport::not_found(engine);
  }
  for (Vertex i = 1; i <= n; ++i) {
    auto pred = g.pred(i);
    auto succ = g.succ(i);
    const std::size_t before = i - 1, after = n - i;
    reads(2);
    switch (id) {
      case kSplit:  // N^-(i) nonempty => |N^+(i)| = n - i
        if (!pred.empty() && succ.size() < after) {
          return hit(pred.front(), i, first_gap(succ, i + 1, n, reads), engine);
        }
        break;
      case kStar:  // N^-(i) nonempty => i = n
        if (!pred.empty() && i < n) return hit(pred.front(), i, i + 1, engine);
        break;
      case kCoStar:  // |N^-(i)| < i - 1 => i = n
        if (pred.size() < before && i < n) return hit(first_gap(pred, 1, i - 1, reads), i, i + 1, engine);
        break;
      case kBipartite:  // N^-(i) nonempty => N^+(i) empty
        if (!pred.empty() && !succ.empty()) return hit(pred.front(), i, succ.front(), engine);
        break;
      case kCoBipartite:  // |N^-(i)| < i - 1 => |N^+(i)| = n - i
        if (pred.size() < before && succ.size() < after) {
          return hit(first_gap(pred, 1, i - 1, reads), i, first_gap(succ, i + 1, n, reads), engine);
        }
        break;
      case kForest:  // |N^-(i)| <= 1
        if (pred.size() >= 2) {
          reads(2);
          return hit(pred[0], pred[1], i, engine);
        }
        break;
      case kCoForest:  // at most one non-neighbor before i
        if (before - pred.size() >= 2) {
          auto [a, b] = two_gaps(pred, 1, i - 1, reads);
          return hit(a, b, i, engine);
        }
        break;
      case kLinearForest:  // every edge joins consecutive positions
        if (!succ.empty() && succ.back() > i + 1) {
          reads(2);
          const Vertex c = succ.front() > i + 1 ? succ.front() : succ[1];
          return hit(i, i + 1, c, engine);
        }
        break;
      case kCoLinearForest:  // every non-edge joins consecutive positions
        if (after >= 2) {
          const bool first_adjacent = !succ.empty() && succ.front() == i + 1;
          auto rest = first_adjacent ? succ.subspan(1) : succ;
          if (rest.size() < after - 1) return hit(i, i + 1, first_gap(rest, i + 2, n, reads), engine);
        }
        break;
      case kInterval:  // N^+(i) is empty or [i+1, j]
        if (!succ.empty() && succ.back() - i != succ.size()) {
          const Vertex b = first_gap(succ, i + 1, n, reads);
          const Vertex c = *std::upper_bound(succ.begin(), succ.end(), b);
          return hit(i, b, c, engine);
        }
        break;
      case kCoInterval:  // N^+(i) is empty or [j, n]
        if (!succ.empty() && succ.front() != n + 1 - succ.size()) {
          const Vertex b = succ.front();
          const Vertex c = first_gap(succ, b, n, reads);
          return hit(i, b, c, engine);
        }
        break;
      default:
        break;
    }
  }
  return DetectionReport::not_found(engine);
}

DetectionReport detect_chordal(const OrderedGraph& g, ScanStats* stats) {
  const char* engine = "three:chordal";
  const Reads reads{stats};
  const auto n = static_cast<Vertex>(g.n());
  // requests[j] lists the i whose largest predecessor is j
  std::vector<std::size_t> req_off(static_cast<std::size_t>(n) + 2, 0);
  std::vector<Vertex> largest(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex i = 3; i <= n; ++i) {
    auto pred = g.pred(i);
    reads(1);
    if (pred.size() >= 2) {
      largest[i] = pred.back();
      ++req_off[pred.back() + 1];
    }
  }
  for (std::size_t j = 1; j < req_off.size(); ++j) req_off[j] += req_off[j - 1];
  std::vector<Vertex> requests(req_off.back());
  {
    std::vector<std::size_t> cur(req_off.begin(), req_off.end() - 1);
    for (Vertex i = 3; i <= n; ++i)
      if (largest[i]) requests[cur[largest[i]]++] = i;
  }
  std::vector<Vertex> stamp(static_cast<std::size_t>(n) + 1, 0);
  Vertex best_i = 0, best_k = 0, best_j = 0;
  for (Vertex j = 1; j <= n; ++j) {
    if (req_off[j] == req_off[j + 1]) continue;
    auto pj = g.pred(j);
    reads(pj.size());
    for (Vertex x : pj) stamp[x] = j;
    for (std::size_t r = req_off[j]; r < req_off[j + 1]; ++r) {
      const Vertex i = requests[r];
      if (best_i && i >= best_i) break;
      auto pi = g.pred(i);
      for (std::size_t t = 0; t + 1 < pi.size(); ++t) {
        reads(1);
        if (stamp[pi[t]] != j) {
          best_i = i;
          best_k = pi[t];
          best_j = j;
          break;
        }
      }
    }
  }
  if (best_i) return hit(best_k, best_j, best_i, engine);
  return DetectionReport::not_found(engine);
}

DetectionReport detect_cochordal(const OrderedGraph& g, ScanStats* stats) {
  const char* engine = "three:co-chordal";
  const Reads reads{stats};
  const auto n = static_cast<Vertex>(g.n());
  std::vector<Vertex> stamp(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex i = 3; i <= n; ++i) {
    auto pi = g.pred(i);
    if (pi.size() >= i - 1) continue;
    // largest non-neighbor j < i, found by walking N^-(i) downwards
    Vertex j = i - 1;
    std::size_t t = pi.size();
    while (t > 0 && pi[t - 1] == j) {
      --t;
      --j;
    }
    reads(pi.size() - t + 1);
    auto pj = g.pred(j);
    if (pj.empty()) continue;
    for (Vertex x : pi) stamp[x] = i;
    reads(pi.size());
    const std::size_t limit = std::min(pj.size(), pi.size() + 1);
    for (std::size_t s = 0; s < limit; ++s) {
      reads(1);
      if (stamp[pj[s]] != i) return hit(pj[s], j, i, engine);
    }
  }
  return DetectionReport::not_found(engine);
}

DetectionReport detect_three(const OrderedGraph& g, const Pattern& p, ScanStats* stats) {
  if (p.k() != 3) throw Error(ErrorCode::InvalidArgument, "detect_three needs a pattern with k = 3");
  const Canonical3 c = canonicalize3(p);
  if (c.mirrored) {
    const OrderedGraph mg = mirror_graph(g);
    if (stats) stats->add(g.m() * 2 + g.n());
    DetectionReport r = detect_three(mg, catalog_pattern(c.canonical_id), stats);
    if (r.found) r.witness = mirror_positions(r.witness, g.n());
    return r;
  }
  const int id = c.canonical_id;
  if (is_condition_pattern(id)) return condition_check(g, id, stats);
  switch (id) {
    case kChordal:
      return detect_chordal(g, stats);
    case kCoChordal:
      return detect_cochordal(g, stats);
    case kTriangle: {
      DetectionReport r = detect_via_clique(g, p);
      r.engine = "three:triangle-clique";
      return r;
    }
    case kCoTriangle:
      if (g.n() <= kComplementCap) {
        DetectionReport r = detect_via_clique(complement_graph(g), catalog_pattern(kTriangle));
        r.engine = "three:co-triangle-complement";
        return r;
      }
      [[fallthrough]];
    default: {
      OracleOptions opts;
      DetectionReport r = brute_detect(g, p, opts);
      r.engine = "three:pruned-search";
      return r;
    }
  }
}

std::span<const ClassFamily> class_families() {
  // Forbidden three-vertex families; the class is the set of graphs admitting
  // an order that avoids every member.
  static const std::vector<ClassFamily> kFamilies = {
      {"forests", {kForest}},
      {"linear forests", {kLinearForest}},
      {"stars", {kStar}},
      {"interval", {kInterval}},
      {"split", {kSplit}},
      {"bipartite", {kBipartite}},
      {"chordal", {kChordal}},
      {"comparability", {kComparability}},
      {"triangle-free", {kTriangle}},
      {"permutation", {kComparability, kCoComparability}},
      {"bipartite permutation", {kComparability, kCoComparability, kBipartite}},
      {"clique", {kCoStar, kMirrorCoStar, kCoLinearForest}},
      {"threshold", {kChordal, kCoChordal}},
      {"proper interval", {kChordal, kMirrorChordal}},
      {"1-split", {kSplit, kCoSplit}},
      {"augmented clique", {kChordal, kSplit}},
      {"2-star", {kCoChordal, kForest}},
      {"bipartite chain", {kCoChordal, kBipartite}},
      {"caterpillar", {kCoComparability, kForest}},
      {"trivially perfect", {kTriangle, kChordal}},
      {"triangle-free and co-chordal", {kTriangle, kCoChordal}},
      {"complete bipartite", {kCoChordal, kCoComparability, kBipartite}},
  };
  return kFamilies;
}

DetectionReport detect_three_family(const OrderedGraph& g, std::span<const int> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    DetectionReport r = detect_three(g, catalog_pattern(ids[i]));
    if (r.found) {
      r.pattern_index = i;
      return r;
    }
  }
  return DetectionReport::not_found("three:family");
}

}  // namespace ordpat
