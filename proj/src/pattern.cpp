#include "ordpat/pattern.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ordpat {

Pattern::Pattern(int k) : k_(k), cls_(static_cast<std::size_t>(k < 1 ? 1 : k) * (k < 1 ? 1 : k), PairClass::Undecided) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "pattern needs k >= 1");
}

Pattern::Pattern(int k, std::initializer_list<std::pair<int, int>> mandatory,
                 std::initializer_list<std::pair<int, int>> forbidden)
    : Pattern(k) {
  for (auto [a, b] : mandatory) set(a, b, PairClass::Mandatory);
  for (auto [a, b] : forbidden) set(a, b, PairClass::Forbidden);
}

bool Pattern::positive() const {
  return std::none_of(cls_.begin(), cls_.end(), [](PairClass c) { return c == PairClass::Forbidden; });
}

bool Pattern::fully_specified() const {
  for (int a = 1; a <= k_; ++a)
    for (int b = a + 1; b <= k_; ++b)
      if (at(a, b) == PairClass::Undecided) return false;
  return true;
}

bool Pattern::all_undecided() const {
  return std::all_of(cls_.begin(), cls_.end(), [](PairClass c) { return c == PairClass::Undecided; });
}

std::vector<PatternEdge> Pattern::decided() const {
  std::vector<PatternEdge> out;
  for (int a = 1; a <= k_; ++a)
    for (int b = a + 1; b <= k_; ++b)
      if (at(a, b) != PairClass::Undecided) out.push_back({a, b, at(a, b)});
  return out;
}

std::vector<std::pair<int, int>> Pattern::mandatory() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= k_; ++a)
    for (int b = a + 1; b <= k_; ++b)
      if (at(a, b) == PairClass::Mandatory) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> Pattern::forbidden() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= k_; ++a)
    for (int b = a + 1; b <= k_; ++b)
      if (at(a, b) == PairClass::Forbidden) out.emplace_back(a, b);
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && ws(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !ws(line[j])) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

bool to_int(std::string_view tok, int& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  std::optional<Pattern> p;
  std::vector<std::size_t> set_at;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto toks = tokens(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (!toks.empty() && toks[0].front() != '#') {
      if (!p) {
        int k = 0;
        if (toks.size() != 1 || !to_int(toks[0], k) || k < 1) {
          throw ParseError(ErrorCode::MalformedLine, line_no, "expected pattern size k >= 1");
        }
        p.emplace(k);
        set_at.assign(static_cast<std::size_t>(k) * k, 0);
      } else {
        int a = 0, b = 0;
        if (toks.size() != 3 || !to_int(toks[0], a) || !to_int(toks[1], b) ||
            (toks[2] != "M" && toks[2] != "F")) {
          throw ParseError(ErrorCode::MalformedLine, line_no, "expected 'a b M' or 'a b F'");
        }
        if (a < 1 || b < 1 || a > p->k() || b > p->k()) {
          throw ParseError(ErrorCode::VertexOutOfRange, line_no, "index out of range 1.." + std::to_string(p->k()));
        }
        if (a >= b) throw ParseError(ErrorCode::MalformedLine, line_no, "pair must satisfy a < b");
        const PairClass c = toks[2] == "M" ? PairClass::Mandatory : PairClass::Forbidden;
        std::size_t slot = static_cast<std::size_t>(a - 1) * p->k() + (b - 1);
        if (set_at[slot] != 0) {
          if (p->at(a, b) != c) {
            throw ParseError(ErrorCode::ConflictingPair, line_no,
                             "pair " + std::to_string(a) + " " + std::to_string(b) +
                                 " already classified differently on line " + std::to_string(set_at[slot]));
          }
          throw ParseError(ErrorCode::DuplicateEdge, line_no,
                           "pair " + std::to_string(a) + " " + std::to_string(b) + " listed twice");
        }
        set_at[slot] = line_no;
        p->set(a, b, c);
      }
    }
    if (nl == text.size()) break;
  }
  if (!p) throw ParseError(ErrorCode::MalformedLine, line_no, "missing pattern size");
  return *p;
}

std::string render_pattern(const Pattern& p) {
  std::ostringstream os;
  os << p.k() << '\n';
  for (const auto& e : p.decided()) os << e.a << ' ' << e.b << ' ' << (e.cls == PairClass::Mandatory ? 'M' : 'F') << '\n';
  return os.str();
}

Pattern complement_pattern(const Pattern& p) {
  Pattern out(p.k());
  for (const auto& e : p.decided()) {
    out.set(e.a, e.b, e.cls == PairClass::Mandatory ? PairClass::Forbidden : PairClass::Mandatory);
  }
  return out;
}

Pattern mirror_pattern(const Pattern& p) {
  const int k = p.k();
  Pattern out(k);
  for (const auto& e : p.decided()) out.set(k + 1 - e.b, k + 1 - e.a, e.cls);
  return out;
}

PatternClass classify(const Pattern& p) {
  PatternClass c;
  c.positive = p.positive();
  c.fully_specified = p.fully_specified();
  const auto edges = p.decided();
  c.decided_edges = edges.size();
  for (const auto& e : edges) {
    for (const auto& f : edges) {
      if (e.a < f.a && f.a < e.b && e.b < f.b) ++c.crossings;
    }
  }
  c.outerplanar = c.crossings == 0;
  std::vector<int> parent(static_cast<std::size_t>(p.k()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  c.forest = true;
  for (const auto& e : edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) {
      c.forest = false;
      break;
    }
    parent[ra] = rb;
  }
  return c;
}

Pattern sub_pattern(const Pattern& p, int lo, int hi) {
  Pattern out(hi - lo + 1);
  for (int a = lo; a <= hi; ++a)
    for (int b = a + 1; b <= hi; ++b) out.set(a - lo + 1, b - lo + 1, p.at(a, b));
  return out;
}

Pattern induced_pattern(const Pattern& p, std::span<const int> positions) {
  Pattern out(static_cast<int>(positions.size()));
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = i + 1; j < positions.size(); ++j)
      out.set(static_cast<int>(i + 1), static_cast<int>(j + 1), p.at(positions[i], positions[j]));
  return out;
}

bool is_realization(const OrderedGraph& g, std::span<const Vertex> positions, const Pattern& p) {
  if (positions.size() != static_cast<std::size_t>(p.k())) {
    throw Error(ErrorCode::InvalidArgument, "witness length " + std::to_string(positions.size()) +
                                                " does not match pattern size " + std::to_string(p.k()));
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > g.n() || (i > 0 && positions[i - 1] >= positions[i])) {
      throw Error(ErrorCode::InvalidArgument, "witness must be strictly increasing within 1..n");
    }
  }
  for (const auto& e : p.decided()) {
    const bool adj = g.adjacent(positions[e.a - 1], positions[e.b - 1]);
    if (adj != (e.cls == PairClass::Mandatory)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

constexpr PairClass U = PairClass::Undecided;
constexpr PairClass M = PairClass::Mandatory;
constexpr PairClass F = PairClass::Forbidden;

// Pairs are (1,2), (1,3), (2,3).
constexpr std::array<CatalogEntry, 27> kCatalog{{
    {0, "Triangle", "triangle", M, M, M, 0, 0},
    {1, "mirror-Chordal", "mirror-chordal", M, M, F, 4, 4},
    {2, "Comparability", "comparability", M, F, M, 2, 2},
    {3, "co-Chordal", "co-chordal", M, F, F, 6, 3},
    {4, "Chordal", "chordal", F, M, M, 1, 4},
    {5, "co-Comparability", "co-comparability", F, M, F, 5, 5},
    {6, "mirror-co-Chordal", "mirror-co-chordal", F, F, M, 3, 3},
    {7, "co-Triangle", "co-triangle", F, F, F, 7, 7},
    {8, "Forest", "forest", U, M, M, 16, 8},
    {9, "mirror-Interval", "mirror-interval", U, M, F, 18, 18},
    {10, "mirror-co-Interval", "mirror-co-interval", U, F, M, 17, 17},
    {11, "co-Forest", "co-forest", U, F, F, 19, 11},
    {12, "Bipartite", "bipartite", M, U, M, 12, 12},
    {13, "Split", "split", M, U, F, 14, 13},
    {14, "mirror-Split=co-Split", "co-split", F, U, M, 13, 13},
    {15, "co-Bipartite", "co-bipartite", F, U, F, 15, 15},
    {16, "mirror-Forest", "mirror-forest", M, M, U, 8, 8},
    {17, "co-Interval", "co-interval", M, F, U, 10, 17},
    {18, "Interval", "interval", F, M, U, 9, 18},
    {19, "mirror-co-Forest", "mirror-co-forest", F, F, U, 11, 11},
    {20, "mirror-Star", "mirror-star", U, U, M, 24, 24},
    {21, "mirror-co-Star", "mirror-co-star", U, U, F, 25, 25},
    {22, "Linear Forest", "linear-forest", U, M, U, 22, 22},
    {23, "co-Linear Forest", "co-linear-forest", U, F, U, 23, 23},
    {24, "Star", "star", M, U, U, 20, 24},
    {25, "co-Star", "co-star", F, U, U, 21, 25},
    {26, "No Graph", "no-graph", U, U, U, 26, 26},
}};

}  // namespace

std::span<const CatalogEntry> three_vertex_catalog() { return kCatalog; }

Pattern catalog_pattern(int id) {
  if (id < 0 || id >= 27) throw Error(ErrorCode::InvalidArgument, "catalog id out of range 0..26");
  const auto& e = kCatalog[static_cast<std::size_t>(id)];
  Pattern p(3);
  p.set(1, 2, e.p12);
  p.set(1, 3, e.p13);
  p.set(2, 3, e.p23);
  return p;
}

std::optional<int> catalog_id_by_name(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (name == e.cli_name || name == e.name) return e.id;
  }
  if (name == "mirror-split") return catalog::kCoSplit;
  return std::nullopt;
}

Canonical3 canonicalize3(const Pattern& p) {
  if (p.k() != 3) throw Error(ErrorCode::InvalidArgument, "canonicalize3 needs k = 3");
  for (const auto& e : kCatalog) {
    if (p.at(1, 2) == e.p12 && p.at(1, 3) == e.p13 && p.at(2, 3) == e.p23) {
      return {e.id, e.canonical_id != e.id, e.canonical_id};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unreachable: catalog is total");
}

Pattern geometry_pattern(std::string_view forbidden) {
  Pattern p(4, {{1, 3}, {2, 4}});
  for (char c : forbidden) {
    switch (c) {
      case 'a': p.set(1, 2, PairClass::Forbidden); break;
      case 'b': p.set(2, 3, PairClass::Forbidden); break;
      case 'c': p.set(3, 4, PairClass::Forbidden); break;
      case 'd': p.set(1, 4, PairClass::Forbidden); break;
      default: throw Error(ErrorCode::InvalidArgument, std::string("unknown geometric pair '") + c + "'");
    }
  }
  return p;
}

Pattern flat_cycle(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "flat cycle needs k >= 3");
  Pattern p(k);
  for (int i = 1; i < k; ++i) p.set(i, i + 1, PairClass::Mandatory);
  p.set(1, k, PairClass::Mandatory);
  return p;
}

}  // namespace ordpat
