#include "ordpat/generate.hpp"

#include <algorithm>
#include <unordered_set>

namespace ordpat {

OrderedGraph generate_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  // sample the smaller of the edge set and its complement
  const bool invert = m > pairs / 2;
  const std::size_t want = invert ? static_cast<std::size_t>(pairs - m) : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(want * 2);
  std::uniform_int_distribution<std::uint64_t> pick(1, n);
  while (chosen.size() < want) {
    auto u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.insert(u * (n + 1) + v);
  }
  if (invert) {
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (!chosen.count(static_cast<std::uint64_t>(u) * (n + 1) + v)) edges.push_back({u, v});
  } else {
    for (auto key : chosen) edges.push_back({static_cast<Vertex>(key / (n + 1)), static_cast<Vertex>(key % (n + 1))});
    // hash order is not part of the contract; sorting keeps output stable
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  }
  return OrderedGraph::from_edges(n, edges);
}

OrderedGraph generate_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return OrderedGraph::from_edges(n, edges);
}

OrderedGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 11) throw Error(ErrorCode::InvalidArgument, "graph_from_mask supports n <= 11");
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v, ++bit)
      if (mask >> bit & 1u) edges.push_back({u, v});
  return OrderedGraph::from_edges(n, edges);
}

Pattern random_pattern(int k, std::mt19937_64& rng, double p_mandatory, double p_forbidden) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Pattern p(k);
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      const double x = u(rng);
      if (x < p_mandatory) p.set(a, b, PairClass::Mandatory);
      else if (x < p_mandatory + p_forbidden) p.set(a, b, PairClass::Forbidden);
    }
  return p;
}

}  // namespace ordpat
