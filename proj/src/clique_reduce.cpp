#include "ordpat/clique_reduce.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ordpat {

namespace {

bool pair_ok(PairClass c, bool adj) {
  return c == PairClass::Undecided || (c == PairClass::Mandatory) == adj;
}

// Sets bits (lo, hi], 1-based positions, in a zeroed bitset.
void fill_range(std::vector<std::uint64_t>& bits, Vertex lo, Vertex hi) {
  for (Vertex v = lo + 1; v <= hi;) {
    const std::size_t b = v - 1;
    if ((b & 63) == 0 && v + 63 <= hi) {
      bits[b >> 6] = ~0ULL;
      v += 64;
    } else {
      bits[b >> 6] |= 1ULL << (b & 63);
      ++v;
    }
  }
}

// Sparse variant for graphs too large for the row bitsets.
bool sparse_search(const OrderedGraph& g, const Pattern& p, std::vector<Vertex>& chosen, int j) {
  const int k = p.k();
  if (j > k) return true;
  const auto n = static_cast<Vertex>(g.n());
  const Vertex lo = j == 1 ? 1 : chosen[static_cast<std::size_t>(j - 2)] + 1;
  const Vertex hi = n - static_cast<Vertex>(k - j);
  auto fits = [&](Vertex v) {
    for (int i = 1; i < j; ++i) {
      const PairClass c = p.at(i, j);
      if (c != PairClass::Undecided && !pair_ok(c, g.adjacent(chosen[static_cast<std::size_t>(i - 1)], v))) return false;
    }
    return true;
  };
  auto attempt = [&](Vertex v) {
    if (!fits(v)) return false;
    chosen[static_cast<std::size_t>(j - 1)] = v;
    return sparse_search(g, p, chosen, j + 1);
  };
  // the shortest successor list among mandatory constraints bounds the candidates
  std::span<const Vertex> best;
  bool have = false;
  for (int i = 1; i < j; ++i) {
    if (p.at(i, j) != PairClass::Mandatory) continue;
    auto s = g.succ(chosen[static_cast<std::size_t>(i - 1)]);
    if (!have || s.size() < best.size()) {
      best = s;
      have = true;
    }
  }
  if (have) {
    for (auto it = std::lower_bound(best.begin(), best.end(), lo); it != best.end() && *it <= hi; ++it) {
      if (attempt(*it)) return true;
    }
    return false;
  }
  for (Vertex v = lo; v <= hi; ++v) {
    if (attempt(v)) return true;
  }
  return false;
}

}  // namespace

LayeredGraph::LayeredGraph(const OrderedGraph& g, Pattern p)
    : n_(g.n()), words_((g.n() + 63) / 64), p_(std::move(p)), rows_(n_ * words_, 0) {
  for (const Edge& e : g.edges()) {
    rows_[(e.u - 1) * words_ + ((e.v - 1) >> 6)] |= 1ULL << ((e.v - 1) & 63);
    rows_[(e.v - 1) * words_ + ((e.u - 1) >> 6)] |= 1ULL << ((e.u - 1) & 63);
  }
}

bool LayeredGraph::adjacent(std::size_t a, std::size_t b) const {
  int la = layer(a), lb = layer(b);
  Vertex u = origin(a), v = origin(b);
  if (la == lb) return false;
  if (la > lb) {
    std::swap(la, lb);
    std::swap(u, v);
  }
  if (u >= v) return false;
  const bool adj = (row(u)[(v - 1) >> 6] >> ((v - 1) & 63)) & 1u;
  return pair_ok(p_.at(la, lb), adj);
}

std::vector<Edge> LayeredGraph::edges() const {
  std::vector<Edge> out;
  const int k = p_.k();
  for (int i = 1; i <= k; ++i)
    for (Vertex u = 1; u <= n_; ++u)
      for (int j = i + 1; j <= k; ++j)
        for (Vertex v = u + 1; v <= n_; ++v) {
          const std::size_t a = id(u, i), b = id(v, j);
          if (adjacent(a, b)) out.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        }
  std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
  return out;
}

LayeredGraph reduce_to_clique(const OrderedGraph& g, const Pattern& p) { return LayeredGraph(g, p); }

std::optional<std::vector<Vertex>> find_layered_clique(const LayeredGraph& lg) {
  const int k = lg.k();
  const auto n = static_cast<Vertex>(lg.n());
  if (static_cast<std::size_t>(k) > lg.n()) return std::nullopt;
  const std::size_t W = lg.words();
  const Pattern& p = lg.pattern();
  // cand[j]: remaining candidates of layer j given the choices of layers < j
  std::vector<std::vector<std::uint64_t>> cand(static_cast<std::size_t>(k) + 1, std::vector<std::uint64_t>(W, 0));
  std::vector<Vertex> chosen(static_cast<std::size_t>(k), 0);

  auto build = [&](int j) {
    auto& c = cand[static_cast<std::size_t>(j)];
    std::fill(c.begin(), c.end(), 0);
    const Vertex lo = j == 1 ? 0 : chosen[static_cast<std::size_t>(j - 2)];
    fill_range(c, lo, n - static_cast<Vertex>(k - j));
    for (int i = 1; i < j; ++i) {
      const PairClass pc = p.at(i, j);
      if (pc == PairClass::Undecided) continue;
      const std::uint64_t* r = lg.row(chosen[static_cast<std::size_t>(i - 1)]);
      if (pc == PairClass::Mandatory) {
        for (std::size_t w = 0; w < W; ++w) c[w] &= r[w];
      } else {
        for (std::size_t w = 0; w < W; ++w) c[w] &= ~r[w];
      }
    }
  };
  auto pop = [&](int j) -> Vertex {
    auto& c = cand[static_cast<std::size_t>(j)];
    for (std::size_t w = 0; w < W; ++w) {
      if (c[w]) {
        const int b = std::countr_zero(c[w]);
        c[w] &= c[w] - 1;
        return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b) + 1);
      }
    }
    return 0;
  };

  int j = 1;
  build(1);
  while (j >= 1) {
    const Vertex v = pop(j);
    if (v == 0) {
      --j;
      continue;
    }
    chosen[static_cast<std::size_t>(j - 1)] = v;
    if (j == k) return chosen;
    ++j;
    build(j);
  }
  return std::nullopt;
}

DetectionReport detect_via_clique(const OrderedGraph& g, const Pattern& p) {
  const char* engine = "clique";
  if (static_cast<std::size_t>(p.k()) > g.n()) return DetectionReport::not_found(engine);
  if (g.n() <= kDenseReductionLimit) {
    auto w = find_layered_clique(reduce_to_clique(g, p));
    return w ? DetectionReport::hit(std::move(*w), engine) : DetectionReport::not_found(engine);
  }
  std::vector<Vertex> chosen(static_cast<std::size_t>(p.k()), 0);
  if (sparse_search(g, p, chosen, 1)) return DetectionReport::hit(std::move(chosen), engine);
  return DetectionReport::not_found(engine);
}

std::string render_layered_graph(const LayeredGraph& lg) {
  const auto es = lg.edges();
  std::ostringstream out;
  out << "# layered reduction: vertex (u, i) has id (i-1)*" << lg.n() << " + u\n";
  out << lg.vertex_count() << ' ' << es.size() << '\n';
  for (const Edge& e : es) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace ordpat
