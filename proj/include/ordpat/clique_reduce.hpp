#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordpat/pattern.hpp"
#include "ordpat/report.hpp"

namespace ordpat {

/// The k-partite graph on V x {1..k}. Vertex (u, i) has id (i-1)*n + u.
/// (u, i) and (v, j), i < j, are adjacent iff u < v and the pair (i, j) of
/// the pattern is satisfied by {u, v}: mandatory needs an edge, forbidden a
/// non-edge, undecided nothing.
class LayeredGraph {
 public:
  LayeredGraph(const OrderedGraph& g, Pattern p);

  int k() const { return p_.k(); }
  std::size_t n() const { return n_; }
  std::size_t vertex_count() const { return n_ * static_cast<std::size_t>(p_.k()); }
  const Pattern& pattern() const { return p_; }

  std::size_t id(Vertex u, int layer) const { return static_cast<std::size_t>(layer - 1) * n_ + u; }
  int layer(std::size_t id) const { return static_cast<int>((id - 1) / n_) + 1; }
  Vertex origin(std::size_t id) const { return static_cast<Vertex>((id - 1) % n_ + 1); }

  bool adjacent(std::size_t a, std::size_t b) const;

  /// Row bitset of u's neighbors in G, bit v-1 set iff uv is an edge.
  const std::uint64_t* row(Vertex u) const { return rows_.data() + static_cast<std::size_t>(u - 1) * words_; }
  std::size_t words() const { return words_; }

  /// Materializes every edge as (smaller id, larger id).
  std::vector<Edge> edges() const;

 private:
  std::size_t n_;
  std::size_t words_;
  Pattern p_;
  std::vector<std::uint64_t> rows_;
};

/// Largest graph for which the dense reduction is built; larger inputs use
/// the same layered search over the neighbor lists.
inline constexpr std::size_t kDenseReductionLimit = 8192;

LayeredGraph reduce_to_clique(const OrderedGraph& g, const Pattern& p);

/// Backtracking over layers 1..k with candidate bitsets; returns the
/// lexicographically smallest clique decoded to graph positions.
std::optional<std::vector<Vertex>> find_layered_clique(const LayeredGraph& lg);

DetectionReport detect_via_clique(const OrderedGraph& g, const Pattern& p);

/// The reduction in the edge-list format (vertex ids as above).
std::string render_layered_graph(const LayeredGraph& lg);

}  // namespace ordpat
