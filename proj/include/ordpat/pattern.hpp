#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordpat/graph.hpp"

namespace ordpat {

enum class PairClass : std::uint8_t { Undecided = 0, Mandatory = 1, Forbidden = 2 };

/// A decided pair (a, b), a < b, 1-based pattern positions.
struct PatternEdge {
  int a;
  int b;
  PairClass cls;
  friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

/// k totally ordered vertices, every unordered pair mandatory, forbidden or
/// undecided.
class Pattern {
 public:
  explicit Pattern(int k = 1);
  Pattern(int k, std::initializer_list<std::pair<int, int>> mandatory,
          std::initializer_list<std::pair<int, int>> forbidden = {});

  int k() const { return k_; }
  PairClass at(int a, int b) const { return cls_[index(a, b)]; }
  void set(int a, int b, PairClass c) { cls_[index(a, b)] = c; }

  bool positive() const;
  bool fully_specified() const;
  bool all_undecided() const;

  /// Decided pairs in lexicographic order.
  std::vector<PatternEdge> decided() const;
  std::vector<std::pair<int, int>> mandatory() const;
  std::vector<std::pair<int, int>> forbidden() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t index(int a, int b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(b - 1);
  }
  int k_;
  std::vector<PairClass> cls_;
};

struct PatternClass {
  bool positive = false;
  bool fully_specified = false;
  std::size_t decided_edges = 0;
  std::size_t crossings = 0;
  bool outerplanar = false;
  bool forest = false;
};

Pattern parse_pattern(std::string_view text);
std::string render_pattern(const Pattern& p);

/// Swaps mandatory and forbidden pairs.
Pattern complement_pattern(const Pattern& p);
/// Reverses the order: pair (a, b) moves to (k+1-b, k+1-a).
Pattern mirror_pattern(const Pattern& p);

/// Counts crossing decided pairs (i < i' < j < j') and checks acyclicity of
/// the decided edges. Mandatory and forbidden pairs are treated alike.
PatternClass classify(const Pattern& p);

/// Pattern induced on positions [lo, hi], relabelled to 1..hi-lo+1.
Pattern sub_pattern(const Pattern& p, int lo, int hi);

/// Pattern induced on an increasing list of positions, relabelled in order.
Pattern induced_pattern(const Pattern& p, std::span<const int> positions);

/// True iff the ordered subgraph induced by `positions` realizes `p`.
/// Throws InvalidArgument on a length mismatch or a non-increasing tuple.
bool is_realization(const OrderedGraph& g, std::span<const Vertex> positions, const Pattern& p);

// ---------------------------------------------------------------------------
// Three-vertex catalog.

struct CatalogEntry {
  int id;
  const char* name;      // display name
  const char* cli_name;  // lowercase CLI spelling
  PairClass p12, p13, p23;
  int mirror_id;     // id of the mirrored pattern
  int canonical_id;  // representative among the 18 mirror classes
};

/// The 27 patterns on three vertices, indexed by id.
std::span<const CatalogEntry> three_vertex_catalog();
Pattern catalog_pattern(int id);
std::optional<int> catalog_id_by_name(std::string_view name);

struct Canonical3 {
  int catalog_id;  // id of the input pattern
  bool mirrored;   // the canonical representative is its mirror
  int canonical_id;
};

/// Identifies a k = 3 pattern in the catalog.
Canonical3 canonicalize3(const Pattern& p);

namespace catalog {
inline constexpr int kTriangle = 0;
inline constexpr int kMirrorChordal = 1;
inline constexpr int kComparability = 2;
inline constexpr int kCoChordal = 3;
inline constexpr int kChordal = 4;
inline constexpr int kCoComparability = 5;
inline constexpr int kMirrorCoChordal = 6;
inline constexpr int kCoTriangle = 7;
inline constexpr int kForest = 8;
inline constexpr int kMirrorInterval = 9;
inline constexpr int kMirrorCoInterval = 10;
inline constexpr int kCoForest = 11;
inline constexpr int kBipartite = 12;
inline constexpr int kSplit = 13;
inline constexpr int kCoSplit = 14;
inline constexpr int kCoBipartite = 15;
inline constexpr int kMirrorForest = 16;
inline constexpr int kCoInterval = 17;
inline constexpr int kInterval = 18;
inline constexpr int kMirrorCoForest = 19;
inline constexpr int kMirrorStar = 20;
inline constexpr int kMirrorCoStar = 21;
inline constexpr int kLinearForest = 22;
inline constexpr int kCoLinearForest = 23;
inline constexpr int kStar = 24;
inline constexpr int kCoStar = 25;
inline constexpr int kNoGraph = 26;
}  // namespace catalog

// ---------------------------------------------------------------------------
// Named 4-vertex families and generators used by the CLI and the tests.

/// Geometric family: mandatory (1,3), (2,4); forbidden subset of
/// a=(1,2), b=(2,3), c=(3,4), d=(1,4). `forbidden` is a string over "abcd".
Pattern geometry_pattern(std::string_view forbidden);

/// Mandatory cycle 1-2-...-k-1 (k >= 3).
Pattern flat_cycle(int k);

}  // namespace ordpat
