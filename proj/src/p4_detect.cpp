#include "ordpat/p4_detect.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace ordpat {

namespace {

struct VariantDef {
  std::array<std::pair<int, int>, 3> edges;
};

constexpr std::array<VariantDef, kP4Variants> kVariants = {{
    {{{{1, 2}, {2, 3}, {3, 4}}}},
    {{{{1, 2}, {2, 3}, {1, 4}}}},
    {{{{1, 2}, {3, 4}, {1, 3}}}},
    {{{{2, 3}, {2, 4}, {1, 3}}}},
    {{{{1, 2}, {3, 4}, {1, 4}}}},
    {{{{1, 4}, {1, 3}, {2, 3}}}},
    {{{{1, 2}, {2, 4}, {1, 3}}}},
    {{{{1, 4}, {1, 3}, {2, 4}}}},
}};

void check_variant(int variant) {
  if (variant < 1 || variant > kP4Variants) {
    throw Error(ErrorCode::InvalidArgument, "P4 variant must be in 1.." + std::to_string(kP4Variants));
  }
}

// Lookups for one edge (i, j), computed on the fly from the adjacency lists.
struct EdgeView {
  Vertex i = 0, j = 0;
  Vertex next_of_i = 0, prev_of_i = 0, next_of_j = 0;
};

struct Extremes {
  const OrderedGraph& g;
  Vertex min_pred(Vertex v) const { auto s = g.pred(v); return s.empty() ? 0 : s.front(); }
  Vertex max_pred(Vertex v) const { auto s = g.pred(v); return s.empty() ? 0 : s.back(); }
  Vertex min_succ(Vertex v) const { auto s = g.succ(v); return s.empty() ? 0 : s.front(); }
  Vertex max_succ(Vertex v) const { auto s = g.succ(v); return s.empty() ? 0 : s.back(); }
};

// Evaluates the test of `variant` on an edge; fills the witness when it holds.
bool probe(const Extremes& x, int variant, const EdgeView& e, std::array<Vertex, 4>& w) {
  const Vertex i = e.i, j = e.j;
  switch (variant) {
    case 1:  // path through the middle edge
      if (x.min_pred(i) && x.min_succ(j)) {
        w = {x.min_pred(i), i, j, x.min_succ(j)};
        return true;
      }
      return false;
    case 2:  // min N+(j) < max N+(i)
      if (x.min_succ(j) && x.min_succ(j) < x.max_succ(i)) {
        w = {i, j, x.min_succ(j), x.max_succ(i)};
        return true;
      }
      return false;
    case 3:  // min N+(i) < j and N+(j) nonempty
      if (x.min_succ(i) < j && x.min_succ(j)) {
        w = {i, x.min_succ(i), j, x.min_succ(j)};
        return true;
      }
      return false;
    case 4:  // min N-(j) < i and j < max N+(i)
      if (x.min_pred(j) < i && j < x.max_succ(i)) {
        w = {x.min_pred(j), i, j, x.max_succ(i)};
        return true;
      }
      return false;
    case 5:  // min N+(i) < max N-(j)
      if (x.min_succ(i) < x.max_pred(j)) {
        w = {i, x.min_succ(i), x.max_pred(j), j};
        return true;
      }
      return false;
    case 6:  // i < max N-(j) and j < max N+(i)
      if (i < x.max_pred(j) && j < x.max_succ(i)) {
        w = {i, x.max_pred(j), j, x.max_succ(i)};
        return true;
      }
      return false;
    case 7:  // e+ < max N+(j)
      if (e.next_of_i && e.next_of_i < x.max_succ(j)) {
        w = {i, j, e.next_of_i, x.max_succ(j)};
        return true;
      }
      return false;
    case 8:  // +e < e-, both strictly inside (i, j)
      if (e.next_of_j && e.next_of_j < j && e.prev_of_i > i && e.next_of_j < e.prev_of_i) {
        w = {i, e.next_of_j, e.prev_of_i, j};
        return true;
      }
      return false;
    default:
      return false;
  }
}

}  // namespace

EdgeTables build_edge_tables(const OrderedGraph& g) {
  EdgeTables et;
  const auto n = static_cast<Vertex>(g.n());
  const std::size_t m = g.m();
  et.edges.reserve(m);
  et.next_of_i.assign(m, 0);
  et.prev_of_i.assign(m, 0);
  et.next_of_j.assign(m, 0);
  et.prev_of_j.assign(m, 0);
  et.min_pred.assign(static_cast<std::size_t>(n) + 1, 0);
  et.max_pred.assign(static_cast<std::size_t>(n) + 1, 0);
  et.min_succ.assign(static_cast<std::size_t>(n) + 1, 0);
  et.max_succ.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::size_t> first(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex i = 1; i <= n; ++i) {
    auto pred = g.pred(i), succ = g.succ(i);
    if (!pred.empty()) {
      et.min_pred[i] = pred.front();
      et.max_pred[i] = pred.back();
    }
    if (!succ.empty()) {
      et.min_succ[i] = succ.front();
      et.max_succ[i] = succ.back();
    }
    first[i] = et.edges.size();
    for (std::size_t t = 0; t < succ.size(); ++t) {
      // neighbors of i around j, looking through the whole neighborhood
      et.next_of_i[et.edges.size()] = t + 1 < succ.size() ? succ[t + 1] : 0;
      et.prev_of_i[et.edges.size()] = t > 0 ? succ[t - 1] : (pred.empty() ? 0 : pred.back());
      et.edges.push_back({i, succ[t]});
    }
  }
  // (u, j) for u in N-(j), j increasing, visits each succ(u) in order
  std::vector<std::size_t> cursor(first.begin(), first.end());
  for (Vertex j = 1; j <= n; ++j) {
    auto pred = g.pred(j), succ = g.succ(j);
    for (std::size_t t = 0; t < pred.size(); ++t) {
      const std::size_t idx = cursor[pred[t]]++;
      et.next_of_j[idx] = t + 1 < pred.size() ? pred[t + 1] : (succ.empty() ? 0 : succ.front());
      et.prev_of_j[idx] = t > 0 ? pred[t - 1] : 0;
    }
  }
  return et;
}

Pattern p4_pattern(int variant, bool mirrored) {
  check_variant(variant);
  Pattern p(4);
  for (auto [a, b] : kVariants[static_cast<std::size_t>(variant - 1)].edges) p.set(a, b, PairClass::Mandatory);
  return mirrored ? mirror_pattern(p) : p;
}

std::optional<std::pair<int, bool>> p4_variant_of(const Pattern& p) {
  if (p.k() != 4) return std::nullopt;
  for (int v = 1; v <= kP4Variants; ++v) {
    if (p4_pattern(v, false) == p) return std::make_pair(v, false);
    if (p4_pattern(v, true) == p) return std::make_pair(v, true);
  }
  return std::nullopt;
}

DetectionReport detect_positive_p4(const OrderedGraph& g, int variant, bool mirrored, ScanStats* stats) {
  check_variant(variant);
  const std::string engine = "p4:" + std::to_string(variant) + (mirrored ? "m" : "");
  if (mirrored) {
    DetectionReport r = detect_positive_p4(mirror_graph(g), variant, false, stats);
    r.engine = engine;
    if (r.found) r.witness = mirror_positions(r.witness, g.n());
    return r;
  }
  const Extremes x{g};
  const auto n = static_cast<Vertex>(g.n());
  // Edges come in (i, j) order, so each pred(j) is walked in order; cursor[j]
  // is the position of i in it. Only variant 8 looks at +e.
  std::vector<std::uint32_t> cursor;
  if (variant == 8) cursor.assign(static_cast<std::size_t>(n) + 1, 0);
  std::array<Vertex, 4> w{};
  EdgeView e;
  for (Vertex i = 1; i <= n; ++i) {
    auto pred = g.pred(i), succ = g.succ(i);
    e.i = i;
    for (std::size_t t = 0; t < succ.size(); ++t) {
      if (stats) stats->add(1);
      e.j = succ[t];
      e.next_of_i = t + 1 < succ.size() ? succ[t + 1] : 0;
      e.prev_of_i = t > 0 ? succ[t - 1] : (pred.empty() ? 0 : pred.back());
      if (variant == 8) {
        auto pj = g.pred(e.j);
        const std::size_t pos = cursor[e.j]++;
        e.next_of_j = pos + 1 < pj.size() ? pj[pos + 1] : x.min_succ(e.j);
      }
      if (probe(x, variant, e, w)) return DetectionReport::hit({w.begin(), w.end()}, engine);
    }
  }
  return DetectionReport::not_found(engine);
}

}  // namespace ordpat
