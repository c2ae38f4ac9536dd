#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordpat/error.hpp"

namespace ordpat {

/// Vertices are identified with their position in the order, 1..n.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Optional instrumentation: number of adjacency-list entries touched.
struct ScanStats {
  std::uint64_t adjacency_reads = 0;
  void add(std::uint64_t k) { adjacency_reads += k; }
};

/// Packed n x n adjacency bit matrix (row-major, 64 bits per word).
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n);
  void set(Vertex u, Vertex v);
  bool test(Vertex u, Vertex v) const {
    const std::size_t bit = static_cast<std::size_t>(u - 1) * n_ + (v - 1);
    return (words_[bit >> 6] >> (bit & 63)) & 1u;
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// Immutable ordered graph. Vertex i is the i-th vertex of the order; every
/// neighbor list is strictly increasing.
class OrderedGraph {
 public:
  OrderedGraph();

  /// Validates and builds a graph. Edges may be given in either
  /// orientation. Throws ParseError (line 0) on self-loops, duplicates,
  /// or out-of-range endpoints.
  static OrderedGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return pred_data_.size(); }

  /// N^-(v): neighbors smaller than v, increasing.
  std::span<const Vertex> pred(Vertex v) const {
    return {pred_data_.data() + pred_off_[v - 1], pred_data_.data() + pred_off_[v]};
  }
  /// N^+(v): neighbors larger than v, increasing.
  std::span<const Vertex> succ(Vertex v) const {
    return {succ_data_.data() + succ_off_[v - 1], succ_data_.data() + succ_off_[v]};
  }

  /// O(log deg) membership test on the sorted lists.
  bool adjacent(Vertex u, Vertex v) const;

  /// Lazily built packed matrix for O(1) adjacency. Thread-safe; the first
  /// caller pays Theta(n^2 / 64) words.
  const BitMatrix& bit_matrix() const;
  bool has_bit_matrix() const;

  /// All edges (u, v), u < v, sorted by u then v.
  std::vector<Edge> edges() const;

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.n_ == b.n_ && a.succ_off_ == b.succ_off_ && a.succ_data_ == b.succ_data_;
  }

 private:
  struct LazyMatrix;

  std::size_t n_ = 0;
  std::vector<std::size_t> pred_off_;
  std::vector<Vertex> pred_data_;
  std::vector<std::size_t> succ_off_;
  std::vector<Vertex> succ_data_;
  std::shared_ptr<LazyMatrix> lazy_;
};

/// Parses the edge-list format: header "n m", then m lines "u v" with
/// 1 <= u < v <= n. '#' starts a comment line; blank lines are ignored.
OrderedGraph parse_ordered_graph(std::string_view text);

/// Canonical rendering: header then edges sorted by (u, v).
std::string render_ordered_graph(const OrderedGraph& g);

/// Vertex i becomes n + 1 - i.
OrderedGraph mirror_graph(const OrderedGraph& g);

/// Same vertex set, pair {u, v} is an edge iff it was not.
OrderedGraph complement_graph(const OrderedGraph& g);

/// Maps a witness of the mirrored graph back to the original positions
/// (reverses the tuple and relabels i -> n + 1 - i).
std::vector<Vertex> mirror_positions(std::span<const Vertex> positions, std::size_t n);

}  // namespace ordpat
