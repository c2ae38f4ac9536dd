#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "ordpat/merge_engine.hpp"

namespace ordpat {

namespace {

VertexMask bit(int x) { return VertexMask{1} << (x - 1); }

bool crosses(const PatternEdge& e, const PatternEdge& f) {
  return (e.a < f.a && f.a < e.b && e.b < f.b) || (f.a < e.a && e.a < f.b && f.b < e.b);
}

bool edge_less(const PatternEdge& x, const PatternEdge& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; }

std::string mask_list(VertexMask m) {
  std::string s = "[";
  bool first = true;
  for (int x = 1; m; ++x, m >>= 1) {
    if (!(m & 1u)) continue;
    if (!first) s += ' ';
    s += std::to_string(x);
    first = false;
  }
  return s + "]";
}

// Neighbor of s inside `set`: the largest element below (dir < 0) or the
// smallest above (dir > 0), 0 if none.
int neighbor_in(VertexMask set, int s, int dir) {
  if (dir < 0) {
    const VertexMask below = set & (bit(s) - 1);
    return below ? 32 - std::countl_zero(below) : 0;
  }
  const VertexMask above = s >= 32 ? 0 : set & ~((bit(s) << 1) - 1);
  return above ? std::countr_zero(above) + 1 : 0;
}

class Builder {
 public:
  explicit Builder(MergeTree& t) : t_(t) {}

  int leaf(const PatternEdge& e, VertexMask anchors) {
    MergeNode n;
    n.kind = MergeNodeKind::Leaf;
    n.vertices = bit(e.a) | bit(e.b);
    n.anchors = anchors & n.vertices;
    n.edges = {e};
    return push(std::move(n));
  }

  int create(int child, int s, VertexMask anchors) {
    MergeNode n;
    n.kind = MergeNodeKind::VertexCreate;
    n.left = child;
    n.created = s;
    n.vertices = bit(s) | (child >= 0 ? t_.nodes[static_cast<std::size_t>(child)].vertices : 0);
    n.anchors = anchors & n.vertices;
    if (child >= 0) n.edges = t_.nodes[static_cast<std::size_t>(child)].edges;
    return push(std::move(n));
  }

  int merge(int l, int r, VertexMask anchors) {
    MergeNode n;
    n.kind = MergeNodeKind::Merge;
    n.left = l;
    n.right = r;
    const auto& a = t_.nodes[static_cast<std::size_t>(l)];
    const auto& b = t_.nodes[static_cast<std::size_t>(r)];
    n.vertices = a.vertices | b.vertices;
    n.anchors = anchors & n.vertices;
    n.edges = a.edges;
    n.edges.insert(n.edges.end(), b.edges.begin(), b.edges.end());
    std::sort(n.edges.begin(), n.edges.end(), edge_less);
    return push(std::move(n));
  }

 private:
  int push(MergeNode n) {
    t_.nodes.push_back(std::move(n));
    return static_cast<int>(t_.nodes.size()) - 1;
  }
  MergeTree& t_;
};

// Outerplanar recursion on P[lo, hi]; the returned node is anchored at lo and
// hi plus whatever of `forced` it contains.
int build_interval(Builder& b, const Pattern& p, int lo, int hi, bool drop_cover, VertexMask forced) {
  const VertexMask ends = bit(lo) | bit(hi);
  if (lo == hi) return b.create(-1, lo, ends | forced);
  int t = 0;  // largest neighbor of lo inside the interval
  for (int x = hi; x > lo; --x) {
    if (p.at(lo, x) == PairClass::Undecided) continue;
    if (x == hi && drop_cover) continue;
    t = x;
    break;
  }
  if (t == 0) {  // lo isolated
    const int child = build_interval(b, p, lo + 1, hi, false, forced);
    return b.create(child, lo, ends | forced);
  }
  if (t == hi) {  // covering edge
    if (hi == lo + 1) return b.leaf({lo, hi, p.at(lo, hi)}, ends | forced);
    const int inner = build_interval(b, p, lo, hi, true, forced);
    const int edge = b.leaf({lo, hi, p.at(lo, hi)}, ends);
    return b.merge(inner, edge, ends | forced);
  }
  const int left = build_interval(b, p, lo, t, false, forced);
  const int right = build_interval(b, p, t, hi, false, forced);
  return b.merge(left, right, ends | forced);
}

}  // namespace

int MergeTree::width() const {
  int w = 0;
  for (const auto& n : nodes) w = std::max(w, std::popcount(n.anchors));
  return w;
}

TreeDiagnostics validate_merge_tree(const MergeTree& t, const Pattern& target) {
  TreeDiagnostics d;
  auto fail = [&](std::size_t node, const std::string& what) {
    d.ok = false;
    d.problems.push_back("node " + std::to_string(node) + ": " + what);
  };
  if (t.k != target.k()) {
    d.ok = false;
    d.problems.push_back("tree size " + std::to_string(t.k) + " differs from pattern size " + std::to_string(target.k()));
    return d;
  }
  if (t.root < 0 || static_cast<std::size_t>(t.root) >= t.nodes.size()) {
    d.ok = false;
    d.problems.push_back("missing root");
    return d;
  }
  const auto count = t.nodes.size();
  auto child_ok = [&](std::size_t i, int c) { return c >= 0 && static_cast<std::size_t>(c) < i; };
  for (std::size_t i = 0; i < count; ++i) {
    const MergeNode& n = t.nodes[i];
    if ((n.anchors & ~n.vertices) != 0) fail(i, "anchor outside the vertex set");
    for (const auto& e : n.edges) {
      if (e.a >= e.b || e.cls == PairClass::Undecided || !(n.vertices & bit(e.a)) || !(n.vertices & bit(e.b))) {
        fail(i, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " not inside the label");
      }
    }
    switch (n.kind) {
      case MergeNodeKind::Leaf:
        if (n.edges.size() != 1 || n.vertices != (bit(n.edges[0].a) | bit(n.edges[0].b))) {
          fail(i, "leaf must hold exactly one edge and its endpoints");
        }
        break;
      case MergeNodeKind::VertexCreate: {
        const int s = n.created;
        if (s < 1 || s > t.k) {
          fail(i, "created position out of range");
          break;
        }
        if (n.left >= 0 && !child_ok(i, n.left)) {
          fail(i, "child must precede its parent");
          break;
        }
        const MergeNode* c = n.left >= 0 ? &t.nodes[static_cast<std::size_t>(n.left)] : nullptr;
        const VertexMask cv = c ? c->vertices : 0, ca = c ? c->anchors : 0;
        if (cv & bit(s)) fail(i, "created vertex already present in the child");
        if (n.vertices != (cv | bit(s))) fail(i, "vertex set is not the child's plus the created vertex");
        if (c ? c->edges != n.edges : !n.edges.empty()) fail(i, "creation changed the edges");
        const int before = neighbor_in(cv, s, -1), after = neighbor_in(cv, s, +1);
        VertexMask droppable = 0;
        if (before) {
          if (!(ca & bit(before))) fail(i, "vertex before the created one is not an anchor in the child");
          droppable |= bit(before);
        }
        if (after) {
          if (!(ca & bit(after))) fail(i, "vertex after the created one is not an anchor in the child");
          droppable |= bit(after);
        }
        if ((ca & ~droppable & ~n.anchors) != 0) fail(i, "creation dropped an anchor other than the created vertex's neighbors");
        if ((n.anchors & ~ca & ~bit(s)) != 0) fail(i, "creation added an anchor to an existing vertex");
        break;
      }
      case MergeNodeKind::Merge: {
        if (!child_ok(i, n.left) || !child_ok(i, n.right)) {
          fail(i, "children must precede their parent");
          break;
        }
        const MergeNode& a = t.nodes[static_cast<std::size_t>(n.left)];
        const MergeNode& b = t.nodes[static_cast<std::size_t>(n.right)];
        // (a) edges partition
        std::vector<PatternEdge> joined = a.edges;
        joined.insert(joined.end(), b.edges.begin(), b.edges.end());
        std::sort(joined.begin(), joined.end(), edge_less);
        bool dup = false;
        for (std::size_t j = 1; j < joined.size(); ++j)
          if (joined[j].a == joined[j - 1].a && joined[j].b == joined[j - 1].b) dup = true;
        if (dup || joined != n.edges) fail(i, "item (a): children edges do not partition the edges");
        // (b) vertex cover
        if ((a.vertices | b.vertices) != n.vertices) fail(i, "item (b): children vertices do not cover the vertices");
        // (c) shared vertices anchored on both sides
        const VertexMask shared = a.vertices & b.vertices;
        if ((shared & ~(a.anchors & b.anchors)) != 0) fail(i, "item (c): shared vertex not an anchor on both sides");
        // (d) anchors persist into the children
        if ((n.anchors & a.vertices & ~a.anchors) != 0 || (n.anchors & b.vertices & ~b.anchors) != 0) {
          fail(i, "item (d): anchor lost in a child");
        }
        // (e) no consecutive vertices split across the sides
        const VertexMask only_a = a.vertices & ~b.vertices, only_b = b.vertices & ~a.vertices;
        int prev = 0;
        for (int x = 1; x <= t.k; ++x) {
          if (!(n.vertices & bit(x))) continue;
          if (prev) {
            const bool split = ((only_a & bit(prev)) && (only_b & bit(x))) || ((only_b & bit(prev)) && (only_a & bit(x)));
            if (split) {
              fail(i, "item (e): consecutive vertices " + std::to_string(prev) + " and " + std::to_string(x) +
                          " split across the sides");
            }
          }
          prev = x;
        }
        // passive anchors are never dropped
        if (((a.anchors ^ b.anchors) & ~n.anchors) != 0) {
          fail(i, "passive anchor dropped by the merge");
        }
        break;
      }
    }
  }
  const MergeNode& r = t.nodes[static_cast<std::size_t>(t.root)];
  const VertexMask all = t.k >= 32 ? ~VertexMask{0} : (bit(t.k + 1) - 1);
  if (r.vertices != all) fail(static_cast<std::size_t>(t.root), "root does not hold every vertex");
  if (r.edges != target.decided()) fail(static_cast<std::size_t>(t.root), "root edges differ from the pattern");
  return d;
}

MergeTree build_outerplanar_tree(const Pattern& p) {
  if (p.k() > kMaxMergePatternSize) {
    throw Error(ErrorCode::InvalidArgument, "merge engine supports k <= " + std::to_string(kMaxMergePatternSize));
  }
  if (!classify(p).outerplanar) throw Error(ErrorCode::PreconditionViolated, "pattern is not outerplanar");
  MergeTree t;
  t.k = p.k();
  Builder b(t);
  t.root = build_interval(b, p, 1, p.k(), false, 0);
  return t;
}

int dist_out(const Pattern& p, std::vector<PatternEdge>* removed) {
  const auto es = p.decided();
  const std::size_t m = es.size();
  // pairs of crossing edges; a removal set must hit each one
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (crosses(es[i], es[j])) cross.emplace_back(i, j);
  if (cross.empty()) {
    if (removed) removed->clear();
    return 0;
  }
  std::vector<std::size_t> pick;
  std::vector<char> gone(m, 0);
  std::function<bool(std::size_t, int)> search = [&](std::size_t from, int left) -> bool {
    bool covered = true;
    for (auto [i, j] : cross)
      if (!gone[i] && !gone[j]) {
        covered = false;
        break;
      }
    if (covered) return true;
    if (left == 0) return false;
    for (std::size_t i = from; i < m; ++i) {
      gone[i] = 1;
      pick.push_back(i);
      if (search(i + 1, left - 1)) return true;
      pick.pop_back();
      gone[i] = 0;
    }
    return false;
  };
  for (int size = 1;; ++size) {
    if (search(0, size)) break;
  }
  if (removed) {
    removed->clear();
    for (std::size_t i : pick) removed->push_back(es[i]);
  }
  return static_cast<int>(pick.size());
}

MergeTree build_bounded_tree(const Pattern& p) {
  if (p.k() > kMaxMergePatternSize) {
    throw Error(ErrorCode::InvalidArgument, "merge engine supports k <= " + std::to_string(kMaxMergePatternSize));
  }
  std::vector<PatternEdge> removed;
  if (dist_out(p, &removed) == 0) return build_outerplanar_tree(p);
  Pattern rest = p;
  VertexMask forced = 0;
  for (const auto& e : removed) {
    rest.set(e.a, e.b, PairClass::Undecided);
    forced |= bit(e.a) | bit(e.b);
  }
  MergeTree t;
  t.k = p.k();
  Builder b(t);
  const int outer = build_interval(b, rest, 1, p.k(), false, forced);
  // removed pairs: anchored leaves completed to the forced vertex set
  int acc = -1;
  for (const auto& e : removed) {
    int node = b.leaf(e, forced);
    for (int x = 1; x <= p.k(); ++x) {
      if ((forced & bit(x)) && x != e.a && x != e.b) node = b.create(node, x, forced);
    }
    acc = acc < 0 ? node : b.merge(acc, node, forced);
  }
  t.root = b.merge(outer, acc, bit(1) | bit(p.k()) | forced);
  return t;
}

int exact_merge_width(const Pattern& p) {
  const int k = p.k();
  if (k > 5) throw Error(ErrorCode::InvalidArgument, "exact merge-width is limited to k <= 5");
  const auto es = p.decided();
  const int m = static_cast<int>(es.size());
  if (m == 0) return 0;
  std::vector<VertexMask> ends(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) ends[static_cast<std::size_t>(i)] = bit(es[static_cast<std::size_t>(i)].a) | bit(es[static_cast<std::size_t>(i)].b);
  auto ends_of = [&](std::uint32_t emask) {
    VertexMask v = 0;
    for (int i = 0; i < m; ++i)
      if (emask >> i & 1u) v |= ends[static_cast<std::size_t>(i)];
    return v;
  };
  auto split_ok = [&](VertexMask all, VertexMask va, VertexMask vb) {
    const VertexMask oa = va & ~vb, ob = vb & ~va;
    int prev = 0;
    for (int x = 1; x <= k; ++x) {
      if (!(all & bit(x))) continue;
      if (prev && (((oa & bit(prev)) && (ob & bit(x))) || ((ob & bit(prev)) && (oa & bit(x))))) return false;
      prev = x;
    }
    return true;
  };
  for (int w = 1;; ++w) {
    std::unordered_map<std::uint64_t, bool> memo;
    std::function<bool(VertexMask, std::uint32_t, VertexMask)> can = [&](VertexMask v, std::uint32_t e,
                                                                        VertexMask a) -> bool {
      if (std::popcount(a) > w) return false;
      const std::uint64_t key = (std::uint64_t{v} << 40) | (std::uint64_t{e} << 8) | a;
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      memo[key] = false;
      bool ok = false;
      if (e == 0 && std::popcount(v) == 1) ok = true;
      if (!ok && std::popcount(e) == 1 && v == ends_of(e)) ok = true;
      const VertexMask used = ends_of(e);
      // vertex creation of an isolated vertex
      for (int s = 1; s <= k && !ok; ++s) {
        if (!(v & bit(s)) || (used & bit(s))) continue;
        const VertexMask cv = v & ~bit(s);
        if (cv == 0) continue;
        VertexMask ca = a & ~bit(s);
        if (int x = neighbor_in(cv, s, -1)) ca |= bit(x);
        if (int x = neighbor_in(cv, s, +1)) ca |= bit(x);
        ok = can(cv, e, ca);
      }
      // merge of two smaller labels; the part holding the lowest edge is `e1`
      if (!ok && e != 0) {
        const std::uint32_t low = e & (~e + 1);
        const int size = std::popcount(v) + std::popcount(e);
        for (std::uint32_t e1 = e; !ok; e1 = (e1 - 1) & e) {
          if (e1 & low) {
            const std::uint32_t e2 = e & ~e1;
            const VertexMask need1 = ends_of(e1), need2 = ends_of(e2);
            // v1 ranges over supersets of need1 inside v
            const VertexMask free1 = v & ~need1;
            for (VertexMask x1 = free1;; x1 = (x1 - 1) & free1) {
              const VertexMask v1 = need1 | x1;
              const VertexMask base2 = (v & ~v1) | need2;
              const VertexMask free2 = v1 & ~base2;
              for (VertexMask x2 = free2;; x2 = (x2 - 1) & free2) {
                const VertexMask v2 = base2 | x2;
                if (v2 != 0 && std::popcount(v1) + std::popcount(e1) < size &&
                    std::popcount(v2) + std::popcount(e2) < size && split_ok(v, v1, v2)) {
                  const VertexMask shared = v1 & v2;
                  const VertexMask a1 = (a & v1) | shared, a2 = (a & v2) | shared;
                  if (can(v1, e1, a1) && can(v2, e2, a2)) {
                    ok = true;
                    break;
                  }
                }
                if (x2 == 0) break;
              }
              if (ok || x1 == 0) break;
            }
          }
          if (e1 == 0) break;
        }
      }
      memo[key] = ok;
      return ok;
    };
    const VertexMask all = bit(k + 1) - 1;
    if (can(all, (std::uint32_t{1} << m) - 1, 0)) return w;
  }
}

Pattern node_pattern(const MergeTree& t, int node) {
  const MergeNode& n = t.nodes.at(static_cast<std::size_t>(node));
  std::vector<int> pos(static_cast<std::size_t>(t.k) + 1, 0);
  int c = 0;
  for (int x = 1; x <= t.k; ++x)
    if (n.vertices & bit(x)) pos[static_cast<std::size_t>(x)] = ++c;
  Pattern p(std::max(c, 1));
  for (const auto& e : n.edges) p.set(pos[static_cast<std::size_t>(e.a)], pos[static_cast<std::size_t>(e.b)], e.cls);
  return p;
}

std::vector<int> node_anchors(const MergeTree& t, int node) {
  std::vector<int> out;
  const VertexMask a = t.nodes.at(static_cast<std::size_t>(node)).anchors;
  for (int x = 1; x <= t.k; ++x)
    if (a & bit(x)) out.push_back(x);
  return out;
}

std::string dump_tree(const MergeTree& t) {
  std::ostringstream out;
  std::function<void(int, int)> rec = [&](int i, int depth) {
    const MergeNode& n = t.nodes[static_cast<std::size_t>(i)];
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    switch (n.kind) {
      case MergeNodeKind::Leaf: {
        const auto& e = n.edges[0];
        out << "(leaf " << e.a << '-' << e.b << ' ' << (e.cls == PairClass::Mandatory ? 'M' : 'F') << ' '
            << mask_list(n.anchors) << ')';
        break;
      }
      case MergeNodeKind::VertexCreate:
        out << "(create " << n.created << ' ' << mask_list(n.anchors);
        if (n.left >= 0) {
          out << '\n';
          rec(n.left, depth + 1);
        }
        out << ')';
        break;
      case MergeNodeKind::Merge:
        out << "(merge " << mask_list(n.anchors) << '\n';
        rec(n.left, depth + 1);
        out << '\n';
        rec(n.right, depth + 1);
        out << ')';
        break;
    }
  };
  if (t.root >= 0) rec(t.root, 0);
  out << '\n';
  return out.str();
}

}  // namespace ordpat
