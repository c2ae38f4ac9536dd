#pragma once

#include <random>
#include <vector>

#include "ordpat/generate.hpp"
#include "ordpat/oracle.hpp"
#include "ordpat/pattern.hpp"

namespace testing_support {

using namespace ordpat;

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Calls f on every graph with n vertices.
template <class F>
void for_all_graphs(std::size_t n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_mask(n, mask));
}

inline OrderedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  return generate_gnp(n, p, rng());
}

// Random graph with n in [lo, hi] and an edge probability drawn from a few levels.
inline OrderedGraph random_small_graph(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  static constexpr double kDensity[] = {0.1, 0.3, 0.5, 0.8};
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  const std::size_t n = size(rng);
  return random_graph(rng, n, kDensity[rng() % 4]);
}

inline bool oracle_found(const OrderedGraph& g, const Pattern& p) {
  OracleOptions o;
  o.override_cap = true;
  return brute_detect(g, p, o).found;
}

inline bool witness_ok(const OrderedGraph& g, const Pattern& p, const DetectionReport& r) {
  return !r.found || (r.witness.size() == static_cast<std::size_t>(p.k()) && is_realization(g, r.witness, p));
}

}  // namespace testing_support
