#include "ordpat/graph.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <sstream>

namespace ordpat {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "ok";
    case ErrorCode::MalformedLine: return "malformed-line";
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::ConflictingPair: return "conflicting-pair";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::SizeCapExceeded: return "size-cap-exceeded";
    case ErrorCode::WidthCapExceeded: return "width-cap-exceeded";
    case ErrorCode::PreconditionViolated: return "precondition-violated";
    case ErrorCode::InvalidTree: return "invalid-tree";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_((n * n + 63) / 64, 0) {}

void BitMatrix::set(Vertex u, Vertex v) {
  const std::size_t bit = static_cast<std::size_t>(u - 1) * n_ + (v - 1);
  words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
}

struct OrderedGraph::LazyMatrix {
  std::once_flag once;
  std::unique_ptr<BitMatrix> matrix;
};

OrderedGraph::OrderedGraph()
    : pred_off_(1, 0), succ_off_(1, 0), lazy_(std::make_shared<LazyMatrix>()) {}

namespace {

// Builds both neighbor lists in O(n + m) without comparison sorting.
// Pass 1 buckets edges by their smaller endpoint; scanning buckets in order
// appends to N^-(v) in increasing order. Pass 2 walks v = 1..n and appends v
// to N^+(u) for every u in N^-(v), again in increasing order.
void build_neighborhoods(std::size_t n, std::span<const Edge> edges,
                         std::vector<std::size_t>& pred_off, std::vector<Vertex>& pred_data,
                         std::vector<std::size_t>& succ_off, std::vector<Vertex>& succ_data) {
  const std::size_t m = edges.size();
  std::vector<std::size_t> by_low_off(n + 2, 0);
  pred_off.assign(n + 1, 0);
  succ_off.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++by_low_off[e.u + 1];
    ++pred_off[e.v];
    ++succ_off[e.u];
  }
  for (std::size_t i = 1; i <= n + 1; ++i) by_low_off[i] += by_low_off[i - 1];
  std::vector<Vertex> by_low(m);
  {
    std::vector<std::size_t> cursor(by_low_off.begin(), by_low_off.end() - 1);
    for (std::size_t idx = 0; idx < m; ++idx) by_low[cursor[edges[idx].u]++] = static_cast<Vertex>(idx);
  }
  // prefix sums: offsets of vertex v start at off[v-1]
  std::size_t acc_p = 0, acc_s = 0;
  for (std::size_t v = 1; v <= n; ++v) {
    const std::size_t cp = pred_off[v], cs = succ_off[v];
    pred_off[v] = acc_p + cp;
    succ_off[v] = acc_s + cs;
    acc_p += cp;
    acc_s += cs;
  }
  pred_off[0] = succ_off[0] = 0;
  // pred_off[v] currently holds the end of v's block; compute fill cursors
  std::vector<std::size_t> pcur(n + 1), scur(n + 1);
  for (std::size_t v = 1; v <= n; ++v) {
    pcur[v] = pred_off[v - 1];
    scur[v] = succ_off[v - 1];
  }
  pred_data.assign(m, 0);
  succ_data.assign(m, 0);
  for (Vertex idx : by_low) {
    const Edge& e = edges[idx];
    pred_data[pcur[e.v]++] = e.u;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t p = pred_off[v - 1]; p < pred_off[v]; ++p) {
      succ_data[scur[pred_data[p]]++] = static_cast<Vertex>(v);
    }
  }
}

}  // namespace

OrderedGraph OrderedGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ParseError(ErrorCode::SelfLoop, 0, "self-loop at vertex " + std::to_string(e.u));
    }
    Edge f = e.u < e.v ? e : Edge{e.v, e.u};
    if (f.u < 1 || f.v > n) {
      throw ParseError(ErrorCode::VertexOutOfRange, 0,
                       "edge " + std::to_string(f.u) + " " + std::to_string(f.v) + " out of range 1.." +
                           std::to_string(n));
    }
    norm.push_back(f);
  }
  OrderedGraph g;
  g.n_ = n;
  build_neighborhoods(n, norm, g.pred_off_, g.pred_data_, g.succ_off_, g.succ_data_);
  for (std::size_t v = 1; v <= n; ++v) {
    auto s = g.succ(static_cast<Vertex>(v));
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] == s[i - 1]) {
        throw ParseError(ErrorCode::DuplicateEdge, 0,
                         "duplicate edge " + std::to_string(v) + " " + std::to_string(s[i]));
      }
    }
  }
  return g;
}

bool OrderedGraph::adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  auto s = succ(u);
  return std::binary_search(s.begin(), s.end(), v);
}

const BitMatrix& OrderedGraph::bit_matrix() const {
  std::call_once(lazy_->once, [this] {
    auto mat = std::make_unique<BitMatrix>(n_);
    for (std::size_t u = 1; u <= n_; ++u) {
      for (Vertex v : succ(static_cast<Vertex>(u))) {
        mat->set(static_cast<Vertex>(u), v);
        mat->set(v, static_cast<Vertex>(u));
      }
    }
    lazy_->matrix = std::move(mat);
  });
  return *lazy_->matrix;
}

bool OrderedGraph::has_bit_matrix() const { return lazy_->matrix != nullptr; }

std::vector<Edge> OrderedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (std::size_t u = 1; u <= n_; ++u) {
    for (Vertex v : succ(static_cast<Vertex>(u))) out.push_back({static_cast<Vertex>(u), v});
  }
  return out;
}

namespace {

bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

OrderedGraph parse_ordered_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError(ErrorCode::MalformedLine, line_no, "expected two integers");
    }
    std::uint64_t a = 0, b = 0;
    if (!parse_uint(toks[0], a) || !parse_uint(toks[1], b)) {
      throw ParseError(ErrorCode::MalformedLine, line_no, "expected two integers");
    }
    if (!have_header) {
      n = a;
      m = b;
      if (n > 0xFFFFFFFEull) throw ParseError(ErrorCode::MalformedLine, line_no, "n too large");
      have_header = true;
    } else {
      if (a == b) throw ParseError(ErrorCode::SelfLoop, line_no, "self-loop at vertex " + std::to_string(a));
      if (a < 1 || b < 1 || a > n || b > n) {
        throw ParseError(ErrorCode::VertexOutOfRange, line_no,
                         "vertex out of range 1.." + std::to_string(n));
      }
      if (a > b) {
        throw ParseError(ErrorCode::MalformedLine, line_no, "edge must be written as u v with u < v");
      }
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
      edge_line.push_back(line_no);
    }
    if (nl == text.size()) break;
  }
  if (!have_header) throw ParseError(ErrorCode::MalformedLine, line_no, "missing header");
  if (edges.size() != m) {
    throw ParseError(ErrorCode::MalformedLine, line_no,
                     "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  // duplicate detection with line numbers: bucket by u, stamp by v
  {
    std::vector<std::size_t> off(n + 2, 0);
    for (const Edge& e : edges) ++off[e.u + 1];
    for (std::size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) order[off[edges[i].u]++] = i;
    std::vector<std::size_t> seen(n + 1, SIZE_MAX);
    for (std::size_t idx : order) {
      const Edge& e = edges[idx];
      if (seen[e.v] == e.u) {
        throw ParseError(ErrorCode::DuplicateEdge, edge_line[idx],
                         "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      }
      seen[e.v] = e.u;
    }
  }
  return OrderedGraph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string render_ordered_graph(const OrderedGraph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (std::size_t u = 1; u <= g.n(); ++u) {
    for (Vertex v : g.succ(static_cast<Vertex>(u))) os << u << ' ' << v << '\n';
  }
  return os.str();
}

OrderedGraph mirror_graph(const OrderedGraph& g) {
  const auto n = static_cast<Vertex>(g.n());
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : g.succ(u)) edges.push_back({n + 1 - v, n + 1 - u});
  }
  return OrderedGraph::from_edges(g.n(), edges);
}

OrderedGraph complement_graph(const OrderedGraph& g) {
  const auto n = static_cast<Vertex>(g.n());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - (n ? 1 : 0)) / 2 - g.m());
  std::vector<char> mark(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : g.succ(u)) mark[v] = 1;
    for (Vertex v = u + 1; v <= n; ++v) {
      if (!mark[v]) edges.push_back({u, v});
    }
    for (Vertex v : g.succ(u)) mark[v] = 0;
  }
  return OrderedGraph::from_edges(g.n(), edges);
}

std::vector<Vertex> mirror_positions(std::span<const Vertex> positions, std::size_t n) {
  std::vector<Vertex> out(positions.rbegin(), positions.rend());
  for (Vertex& v : out) v = static_cast<Vertex>(n + 1 - v);
  return out;
}

}  // namespace ordpat
