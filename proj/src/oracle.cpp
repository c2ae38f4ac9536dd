#include "ordpat/oracle.hpp"

#include <vector>

namespace ordpat {

namespace {

constexpr std::size_t kMatrixLimit = 1u << 14;

void check_cap(const Pattern& p, const OracleOptions& opts) {
  if (p.k() > opts.size_cap && !opts.override_cap) {
    throw Error(ErrorCode::SizeCapExceeded, "brute force pattern size " + std::to_string(p.k()) + " exceeds cap " +
                                                std::to_string(opts.size_cap));
  }
}

}  // namespace

void brute_enumerate(const OrderedGraph& g, const Pattern& p,
                     const std::function<bool(std::span<const Vertex>)>& visit, const OracleOptions& opts) {
  check_cap(p, opts);
  const int k = p.k();
  const auto n = static_cast<Vertex>(g.n());
  if (static_cast<std::size_t>(k) > g.n()) return;
  const BitMatrix* mat = g.n() <= kMatrixLimit ? &g.bit_matrix() : nullptr;
  auto adj = [&](Vertex u, Vertex v) { return mat ? mat->test(u, v) : g.adjacent(u, v); };

  // constraints[i]: decided pairs (j, cls) with j < i
  std::vector<std::vector<std::pair<int, bool>>> constraints(static_cast<std::size_t>(k));
  for (const auto& e : p.decided()) {
    constraints[static_cast<std::size_t>(e.b - 1)].emplace_back(e.a - 1, e.cls == PairClass::Mandatory);
  }
  std::vector<Vertex> tuple(static_cast<std::size_t>(k), 0);
  int depth = 0;
  tuple[0] = 0;
  while (depth >= 0) {
    Vertex& cur = tuple[static_cast<std::size_t>(depth)];
    ++cur;
    // leave room for the remaining k - depth - 1 positions
    if (cur > n - static_cast<Vertex>(k - depth - 1)) {
      --depth;
      continue;
    }
    bool ok = true;
    for (auto [j, mandatory] : constraints[static_cast<std::size_t>(depth)]) {
      if (adj(tuple[static_cast<std::size_t>(j)], cur) != mandatory) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth == k - 1) {
      if (!visit(tuple)) return;
      continue;
    }
    ++depth;
    tuple[static_cast<std::size_t>(depth)] = cur;
  }
}

DetectionReport brute_detect(const OrderedGraph& g, const Pattern& p, const OracleOptions& opts) {
  DetectionReport r = DetectionReport::not_found("oracle");
  brute_enumerate(
      g, p,
      [&](std::span<const Vertex> w) {
        r.found = true;
        r.witness.assign(w.begin(), w.end());
        return false;
      },
      opts);
  return r;
}

DetectionReport brute_detect_family(const OrderedGraph& g, std::span<const Pattern> patterns,
                                    const OracleOptions& opts) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    DetectionReport r = brute_detect(g, patterns[i], opts);
    if (r.found) {
      r.pattern_index = i;
      return r;
    }
  }
  return DetectionReport::not_found("oracle");
}

}  // namespace ordpat
