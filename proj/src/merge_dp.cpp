#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include "ordpat/merge_engine.hpp"

namespace ordpat {

namespace {

using Tup = std::array<Vertex, kMaxTupleWidth>;

struct TupHash {
  std::size_t operator()(const Tup& t) const {
    std::size_t h = 0;
    for (Vertex v : t) h = h * 1000003u ^ v;
    return h;
  }
};

VertexMask bit(int x) { return VertexMask{1} << (x - 1); }

int rank_in(VertexMask mask, int x) { return std::popcount(mask & (bit(x) - 1)); }

int neighbor_in(VertexMask set, int s, int dir) {
  if (dir < 0) {
    const VertexMask below = set & (bit(s) - 1);
    return below ? 32 - std::countl_zero(below) : 0;
  }
  const VertexMask above = s >= 32 ? 0 : set & ~((bit(s) << 1) - 1);
  return above ? std::countr_zero(above) + 1 : 0;
}

// Values of the anchors in `to` (a subset of `from`), in position order.
Tup project(const Tup& t, VertexMask from, VertexMask to) {
  Tup out{};
  int j = 0;
  for (VertexMask m = to; m; m &= m - 1) {
    const int x = std::countr_zero(m) + 1;
    out[static_cast<std::size_t>(j++)] = t[static_cast<std::size_t>(rank_in(from, x))];
  }
  return out;
}

struct Table {
  VertexMask anchors = 0;
  std::vector<Tup> tuples;

  void normalize() {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  }
  bool contains(const Tup& t) const { return std::binary_search(tuples.begin(), tuples.end(), t); }
};

class Dp {
 public:
  Dp(const OrderedGraph& g, const MergeTree& t) : g_(g), t_(t), n_(static_cast<Vertex>(g.n())), tables_(t.nodes.size()) {}

  void run() {
    for (std::size_t i = 0; i < t_.nodes.size(); ++i) {
      const MergeNode& node = t_.nodes[i];
      switch (node.kind) {
        case MergeNodeKind::Leaf: tables_[i] = leaf(node); break;
        case MergeNodeKind::VertexCreate: tables_[i] = create(node); break;
        case MergeNodeKind::Merge: tables_[i] = merge(node); break;
      }
    }
  }

  const std::vector<Table>& tables() const { return tables_; }

  std::vector<Vertex> witness() const {
    const Table& root = tables_[static_cast<std::size_t>(t_.root)];
    std::vector<Vertex> pos(static_cast<std::size_t>(t_.k) + 1, 0);
    realize(t_.root, root.tuples.front(), pos);
    return {pos.begin() + 1, pos.end()};
  }

 private:

  // Some x < v that is (mandatory) or is not (forbidden) adjacent to v; 0 if none.
  Vertex left_partner(PairClass c, Vertex v) const {
    auto pred = g_.pred(v);
    if (c == PairClass::Mandatory) return pred.empty() ? 0 : pred.front();
    Vertex x = 1;
    for (Vertex y : pred) {
      if (y != x) break;
      ++x;
    }
    return x < v ? x : 0;
  }

  Vertex right_partner(PairClass c, Vertex u) const {
    auto succ = g_.succ(u);
    if (c == PairClass::Mandatory) return succ.empty() ? 0 : succ.front();
    Vertex x = u + 1;
    for (Vertex y : succ) {
      if (y != x) break;
      ++x;
    }
    return x <= n_ ? x : 0;
  }

  Table leaf(const MergeNode& node) const {
    const PatternEdge& e = node.edges.front();
    Table t;
    t.anchors = node.anchors;
    const bool left = node.anchors & bit(e.a), right = node.anchors & bit(e.b);
    if (left && right) {
      for (Vertex u = 1; u <= n_; ++u) {
        if (e.cls == PairClass::Mandatory) {
          for (Vertex v : g_.succ(u)) t.tuples.push_back({u, v});
        } else {
          auto succ = g_.succ(u);
          std::size_t j = 0;
          for (Vertex v = u + 1; v <= n_; ++v) {
            if (j < succ.size() && succ[j] == v) {
              ++j;
              continue;
            }
            t.tuples.push_back({u, v});
          }
        }
      }
    } else if (left) {
      for (Vertex u = 1; u <= n_; ++u)
        if (right_partner(e.cls, u)) t.tuples.push_back({u});
    } else if (right) {
      for (Vertex v = 1; v <= n_; ++v)
        if (left_partner(e.cls, v)) t.tuples.push_back({v});
    } else {
      for (Vertex u = 1; u <= n_; ++u)
        if (right_partner(e.cls, u)) {
          t.tuples.push_back({});
          break;
        }
    }
    t.normalize();
    return t;
  }

  // Bounds (lo, hi) of the slot of the created vertex for a child tuple.
  std::pair<Vertex, Vertex> slot(const MergeNode& node, VertexMask child_vertices, VertexMask child_anchors,
                                 const Tup& ct) const {
    const int before = neighbor_in(child_vertices, node.created, -1);
    const int after = neighbor_in(child_vertices, node.created, +1);
    const Vertex lo = before ? ct[static_cast<std::size_t>(rank_in(child_anchors, before))] : 0;
    const Vertex hi = after ? ct[static_cast<std::size_t>(rank_in(child_anchors, after))] : n_ + 1;
    return {lo, hi};
  }

  Table create(const MergeNode& node) const {
    Table t;
    t.anchors = node.anchors;
    const int s = node.created;
    const bool anchored = node.anchors & bit(s);
    const int rs = rank_in(node.anchors, s);
    Table empty;
    empty.tuples.push_back({});
    const Table& child = node.left >= 0 ? tables_[static_cast<std::size_t>(node.left)] : empty;
    const VertexMask cv = node.left >= 0 ? t_.nodes[static_cast<std::size_t>(node.left)].vertices : 0;
    const VertexMask keep = node.anchors & ~bit(s);
    for (const Tup& ct : child.tuples) {
      auto [lo, hi] = slot(node, cv, child.anchors, ct);
      if (hi < lo + 2) continue;
      Tup base = project(ct, child.anchors, keep);
      if (!anchored) {
        t.tuples.push_back(base);
        continue;
      }
      // make room for the created vertex's value at its rank
      Tup out{};
      for (int j = 0, src = 0; j < std::popcount(node.anchors); ++j) {
        if (j == rs) continue;
        out[static_cast<std::size_t>(j)] = base[static_cast<std::size_t>(src++)];
      }
      for (Vertex v = lo + 1; v < hi; ++v) {
        out[static_cast<std::size_t>(rs)] = v;
        t.tuples.push_back(out);
      }
    }
    t.normalize();
    return t;
  }

  Table merge(const MergeNode& node) const {
    const Table& tu = tables_[static_cast<std::size_t>(node.left)];
    const Table& tv = tables_[static_cast<std::size_t>(node.right)];
    const VertexMask au = tu.anchors, av = tv.anchors, ap = node.anchors;
    const VertexMask Y = ap & au & av, X = (au & av) & ~ap, U = au & ~av, V = av & ~au;
    struct Group {
      std::vector<std::pair<Tup, Tup>> left;   // (U, X)
      std::vector<std::pair<Tup, Tup>> right;  // (X, V)
    };
    std::unordered_map<Tup, Group, TupHash> groups;
    for (const Tup& t : tu.tuples) groups[project(t, au, Y)].left.emplace_back(project(t, au, U), project(t, au, X));
    for (const Tup& t : tv.tuples) {
      auto it = groups.find(project(t, av, Y));
      if (it != groups.end()) it->second.right.emplace_back(project(t, av, X), project(t, av, V));
    }
    Table out;
    out.anchors = ap;
    for (auto& [y, grp] : groups) {
      if (grp.left.empty() || grp.right.empty()) continue;
      std::unordered_map<Tup, std::size_t, TupHash> xid, uid, vid;
      std::vector<Tup> us, vs;
      std::vector<std::vector<std::size_t>> mu;  // U id -> X ids
      for (auto& [u, x] : grp.left) {
        auto xi = xid.try_emplace(x, xid.size()).first;
        auto [ui, unew] = uid.try_emplace(u, us.size());
        if (unew) {
          us.push_back(u);
          mu.emplace_back();
        }
        mu[ui->second].push_back(xi->second);
      }
      std::vector<std::pair<std::size_t, std::size_t>> mv_pairs;  // (X id, V id)
      for (auto& [x, v] : grp.right) {
        auto xi = xid.find(x);
        if (xi == xid.end()) continue;
        auto [vi, vnew] = vid.try_emplace(v, vs.size());
        if (vnew) vs.push_back(v);
        mv_pairs.emplace_back(xi->second, vi->second);
      }
      if (vs.empty()) continue;
      const std::size_t words = (vs.size() + 63) / 64;
      std::vector<std::uint64_t> mv(xid.size() * words, 0);
      for (auto [x, v] : mv_pairs) mv[x * words + (v >> 6)] |= 1ULL << (v & 63);
      std::vector<std::uint64_t> row(words);
      for (std::size_t ui = 0; ui < us.size(); ++ui) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t x : mu[ui])
          for (std::size_t w = 0; w < words; ++w) row[w] |= mv[x * words + w];
        for (std::size_t w = 0; w < words; ++w) {
          for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
            const std::size_t vi = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            Tup t{};
            int j = 0, iy = 0, iu = 0, iv = 0;
            for (VertexMask m = ap; m; m &= m - 1) {
              const VertexMask b = m & (~m + 1);
              if (b & Y) t[static_cast<std::size_t>(j++)] = y[static_cast<std::size_t>(iy++)];
              else if (b & U) t[static_cast<std::size_t>(j++)] = us[ui][static_cast<std::size_t>(iu++)];
              else t[static_cast<std::size_t>(j++)] = vs[vi][static_cast<std::size_t>(iv++)];
            }
            out.tuples.push_back(t);
          }
        }
      }
    }
    out.normalize();
    return out;
  }

  // Fills pos[x] for every vertex x of the node's label, given the anchor values.
  void realize(int index, const Tup& values, std::vector<Vertex>& pos) const {
    const MergeNode& node = t_.nodes[static_cast<std::size_t>(index)];
    for (VertexMask m = node.anchors; m; m &= m - 1) {
      const int x = std::countr_zero(m) + 1;
      pos[static_cast<std::size_t>(x)] = values[static_cast<std::size_t>(rank_in(node.anchors, x))];
    }
    switch (node.kind) {
      case MergeNodeKind::Leaf: {
        const PatternEdge& e = node.edges.front();
        const bool left = node.anchors & bit(e.a), right = node.anchors & bit(e.b);
        Vertex& a = pos[static_cast<std::size_t>(e.a)];
        Vertex& b = pos[static_cast<std::size_t>(e.b)];
        if (left && !right) {
          b = right_partner(e.cls, a);
        } else if (right && !left) {
          a = left_partner(e.cls, b);
        } else if (!left && !right) {
          for (Vertex u = 1; u <= n_; ++u) {
            if (Vertex v = right_partner(e.cls, u)) {
              a = u;
              b = v;
              break;
            }
          }
        }
        break;
      }
      case MergeNodeKind::VertexCreate: {
        const int s = node.created;
        const bool anchored = node.anchors & bit(s);
        const Vertex vs = anchored ? pos[static_cast<std::size_t>(s)] : 0;
        if (node.left < 0) {
          if (!anchored) pos[static_cast<std::size_t>(s)] = 1;
          break;
        }
        const Table& child = tables_[static_cast<std::size_t>(node.left)];
        const VertexMask cv = t_.nodes[static_cast<std::size_t>(node.left)].vertices;
        const VertexMask keep = node.anchors & ~bit(s);
        const Tup want = project(values, node.anchors, keep);
        for (const Tup& ct : child.tuples) {
          if (project(ct, child.anchors, keep) != want) continue;
          auto [lo, hi] = slot(node, cv, child.anchors, ct);
          if (hi < lo + 2) continue;
          if (anchored && !(lo < vs && vs < hi)) continue;
          realize(node.left, ct, pos);
          pos[static_cast<std::size_t>(s)] = anchored ? vs : lo + 1;
          return;
        }
        throw Error(ErrorCode::InvalidTree, "witness reconstruction failed at a vertex creation");
      }
      case MergeNodeKind::Merge: {
        const Table& tu = tables_[static_cast<std::size_t>(node.left)];
        const Table& tv = tables_[static_cast<std::size_t>(node.right)];
        const VertexMask au = tu.anchors, av = tv.anchors, ap = node.anchors;
        const Tup want_u = project(values, ap, au & ap);
        for (const Tup& t : tu.tuples) {
          if (project(t, au, au & ap) != want_u) continue;
          // the right tuple: shared anchors from t, the rest from the parent
          Tup r{};
          int j = 0;
          for (VertexMask m = av; m; m &= m - 1) {
            const int x = std::countr_zero(m) + 1;
            r[static_cast<std::size_t>(j++)] = (au & bit(x)) ? t[static_cast<std::size_t>(rank_in(au, x))]
                                                            : values[static_cast<std::size_t>(rank_in(ap, x))];
          }
          if (!tv.contains(r)) continue;
          realize(node.left, t, pos);
          realize(node.right, r, pos);
          return;
        }
        throw Error(ErrorCode::InvalidTree, "witness reconstruction failed at a merge");
      }
    }
  }

  const OrderedGraph& g_;
  const MergeTree& t_;
  Vertex n_;
  std::vector<Table> tables_;
};

void check_tree(const MergeTree& t, const DpOptions& opts) {
  const int w = t.width();
  if (w > opts.width_cap || w > kMaxTupleWidth) {
    throw Error(ErrorCode::WidthCapExceeded, "merge tree width " + std::to_string(w) + " exceeds cap " +
                                                 std::to_string(std::min(opts.width_cap, kMaxTupleWidth)));
  }
  if (t.root < 0) throw Error(ErrorCode::InvalidTree, "merge tree has no root");
  Pattern target(t.k);
  for (const auto& e : t.nodes[static_cast<std::size_t>(t.root)].edges) {
    if (e.a >= 1 && e.b <= t.k && e.a < e.b) target.set(e.a, e.b, e.cls);
  }
  const auto d = validate_merge_tree(t, target);
  if (!d.ok) throw Error(ErrorCode::InvalidTree, "invalid merge tree: " + d.problems.front());
}

}  // namespace

DpResult run_dp_tables(const OrderedGraph& g, const MergeTree& t, const DpOptions& opts) {
  check_tree(t, opts);
  Dp dp(g, t);
  dp.run();
  DpResult res;
  const auto& root = dp.tables()[static_cast<std::size_t>(t.root)];
  res.report = root.tuples.empty() ? DetectionReport::not_found("merge") : DetectionReport::hit(dp.witness(), "merge");
  for (const auto& tab : dp.tables()) {
    AnchorTable a;
    a.anchors = tab.anchors;
    a.width = std::popcount(tab.anchors);
    a.tuples.reserve(tab.tuples.size());
    for (const Tup& tp : tab.tuples) a.tuples.emplace_back(tp.begin(), tp.begin() + a.width);
    res.tables.push_back(std::move(a));
  }
  return res;
}

DetectionReport run_dp(const OrderedGraph& g, const MergeTree& t, const DpOptions& opts) {
  check_tree(t, opts);
  Dp dp(g, t);
  dp.run();
  const auto& root = dp.tables()[static_cast<std::size_t>(t.root)];
  if (root.tuples.empty()) return DetectionReport::not_found("merge");
  return DetectionReport::hit(dp.witness(), "merge");
}

DetectionReport detect_via_merge(const OrderedGraph& g, const Pattern& p, const DpOptions& opts) {
  if (p.k() == 1 || p.all_undecided()) {
    if (g.n() < static_cast<std::size_t>(p.k())) return DetectionReport::not_found("merge");
    std::vector<Vertex> w(static_cast<std::size_t>(p.k()));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Vertex>(i + 1);
    return DetectionReport::hit(std::move(w), "merge");
  }
  return run_dp(g, build_bounded_tree(p), opts);
}

}  // namespace ordpat
