#include "ordpat/forest_detect.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace ordpat {

namespace {

// Union-find over pattern positions.
struct Components {
  std::vector<int> parent;
  explicit Components(int k) : parent(static_cast<std::size_t>(k) + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Components of the edges inside [lo, hi] other than (skip_a, skip_b).
Components components_without(const Pattern& p, int lo, int hi, int skip_a, int skip_b) {
  Components c(p.k());
  for (int a = lo; a <= hi; ++a)
    for (int b = a + 1; b <= hi; ++b)
      if (p.at(a, b) == PairClass::Mandatory && !(a == skip_a && b == skip_b)) c.join(a, b);
  return c;
}

class ForestSolver {
 public:
  ForestSolver(const OrderedGraph& g, const ForestPlan& plan)
      : g_(g),
        plan_(plan),
        n_(static_cast<Vertex>(g.n())),
        width_(static_cast<std::size_t>(n_) + 2),
        arena_(static_cast<std::size_t>(plan.states) * width_),
        done_(static_cast<std::size_t>(plan.states), 0) {}

  Vertex inf() const { return n_ + 1; }

  const Vertex* fwd(int a, int b) { return get(a, b, Direction::Forward); }
  const Vertex* bwd(int a, int b) { return get(a, b, Direction::Backward); }

  // Fills pos with a realization of P[a, b] mapping a to u and b to fwd(a,b)[u].
  void realize_fwd(int a, int b, Vertex u, std::vector<Vertex>& pos) {
    const Vertex target = fwd(a, b)[u];
    pos[static_cast<std::size_t>(a)] = u;
    if (a == b) return;
    const auto& sp = plan_.at(a, b);
    if (sp.fwd_j == 0) {
      const Vertex* next = fwd(a + 1, b);
      for (Vertex w = u + 1; w <= n_; ++w) {
        if (next[w] == target) {
          realize_fwd(a + 1, b, w, pos);
          return;
        }
      }
      return;
    }
    const int j = sp.fwd_j, s = sp.fwd_s;
    const Vertex* pl = fwd(a, s - 1);
    const Vertex* pr = bwd(s, j);
    const Vertex* po = fwd(j, b);
    for (Vertex v : g_.succ(u)) {
      if (pl[u] < pr[v] && po[v] == target) {
        realize_fwd(a, s - 1, u, pos);
        realize_bwd(s, j, v, pos);
        realize_fwd(j, b, v, pos);
        return;
      }
    }
  }

  void realize_bwd(int a, int b, Vertex v, std::vector<Vertex>& pos) {
    const Vertex target = bwd(a, b)[v];
    pos[static_cast<std::size_t>(b)] = v;
    if (a == b) return;
    const auto& sp = plan_.at(a, b);
    if (sp.bwd_i == 0) {
      const Vertex* prev = bwd(a, b - 1);
      for (Vertex w = v - 1; w >= 1; --w) {
        if (prev[w] == target) {
          realize_bwd(a, b - 1, w, pos);
          return;
        }
      }
      return;
    }
    const int i = sp.bwd_i, t = sp.bwd_t;
    const Vertex* pl = fwd(i, t);
    const Vertex* pr = bwd(t + 1, b);
    const Vertex* po = bwd(a, i);
    for (Vertex u : g_.pred(v)) {
      if (pl[u] < pr[v] && po[u] == target) {
        realize_fwd(i, t, u, pos);
        realize_bwd(t + 1, b, v, pos);
        realize_bwd(a, i, u, pos);
        return;
      }
    }
  }

 private:
  const Vertex* get(int a, int b, Direction d) {
    const int state = plan_.state(a, b, d);
    Vertex* m = arena_.data() + static_cast<std::size_t>(state) * width_;
    if (!done_[static_cast<std::size_t>(state)]) {
      if (d == Direction::Forward) compute_fwd(a, b, m);
      else compute_bwd(a, b, m);
      done_[static_cast<std::size_t>(state)] = 1;
    }
    return m;
  }

  void compute_fwd(int a, int b, Vertex* m) {
    std::fill(m, m + width_, inf());
    if (a == b) {
      for (Vertex u = 1; u <= n_; ++u) m[u] = u;
      return;
    }
    const auto& sp = plan_.at(a, b);
    if (sp.fwd_j == 0) {  // a isolated: the rest starts strictly later
      const Vertex* next = fwd(a + 1, b);
      Vertex best = inf();
      for (Vertex u = n_; u >= 1; --u) {
        m[u] = best;
        best = std::min(best, next[u]);
      }
      return;
    }
    const Vertex* pl = fwd(a, sp.fwd_s - 1);
    const Vertex* pr = bwd(sp.fwd_s, sp.fwd_j);
    const Vertex* po = fwd(sp.fwd_j, b);
    for (Vertex u = 1; u <= n_; ++u) {
      if (pl[u] > n_) continue;
      for (Vertex v : g_.succ(u))
        if (pl[u] < pr[v]) m[u] = std::min(m[u], po[v]);
    }
  }

  void compute_bwd(int a, int b, Vertex* m) {
    std::fill(m, m + width_, Vertex{0});
    if (a == b) {
      for (Vertex v = 1; v <= n_; ++v) m[v] = v;
      return;
    }
    const auto& sp = plan_.at(a, b);
    if (sp.bwd_i == 0) {
      const Vertex* prev = bwd(a, b - 1);
      Vertex best = 0;
      for (Vertex v = 1; v <= n_; ++v) {
        m[v] = best;
        best = std::max(best, prev[v]);
      }
      return;
    }
    const Vertex* pl = fwd(sp.bwd_i, sp.bwd_t);
    const Vertex* pr = bwd(sp.bwd_t + 1, b);
    const Vertex* po = bwd(a, sp.bwd_i);
    for (Vertex v = 1; v <= n_; ++v) {
      if (pr[v] == 0) continue;
      for (Vertex u : g_.pred(v))
        if (pl[u] < pr[v]) m[v] = std::max(m[v], po[u]);
    }
  }

  const OrderedGraph& g_;
  const ForestPlan& plan_;
  Vertex n_;
  std::size_t width_;
  std::vector<Vertex> arena_;  // one row of n + 2 entries per plan state
  std::vector<char> done_;
};

}  // namespace

void require_positive_outerplanar_forest(const Pattern& p) {
  const PatternClass c = classify(p);
  if (!c.positive) throw Error(ErrorCode::PreconditionViolated, "pattern is not positive (it has forbidden pairs)");
  if (!c.outerplanar) throw Error(ErrorCode::PreconditionViolated, "pattern is not outerplanar (two pairs cross)");
  if (!c.forest) throw Error(ErrorCode::PreconditionViolated, "pattern is not a forest (its edges contain a cycle)");
}

NestingAnalysis analyze_nesting(const Pattern& p) {
  require_positive_outerplanar_forest(p);
  NestingAnalysis na;
  na.edges = p.decided();
  const std::size_t m = na.edges.size();
  na.relation.assign(m, std::vector<NestRelation>(m, NestRelation::SideBySide));
  na.cls.assign(m, std::vector<NestClass>(m, NestClass::None));
  auto inside = [&](const PatternEdge& x, const PatternEdge& r) {
    return r.a <= x.a && x.b <= r.b && !(x.a == r.a && x.b == r.b);
  };
  for (std::size_t r = 0; r < m; ++r) {
    const auto& re = na.edges[r];
    Components c = components_without(p, 1, p.k(), re.a, re.b);
    for (std::size_t x = 0; x < m; ++x) {
      const auto& xe = na.edges[x];
      if (x != r && (inside(xe, re) || inside(re, xe))) na.relation[r][x] = NestRelation::Nested;
      if (!inside(xe, re)) continue;
      if (c.find(xe.a) == c.find(re.a)) na.cls[r][x] = NestClass::Left;
      else if (c.find(xe.a) == c.find(re.b)) na.cls[r][x] = NestClass::Right;
      else na.cls[r][x] = NestClass::Centered;
    }
  }
  for (std::size_t x = 1; x < m; ++x) {
    const auto& e = na.edges[x];
    const auto& l = na.edges[na.lome];
    if (e.a < l.a || (e.a == l.a && e.b > l.b)) na.lome = x;
    const auto& r = na.edges[na.rome];
    if (e.b > r.b || (e.b == r.b && e.a < r.a)) na.rome = x;
  }
  return na;
}

ForestPlan::ForestPlan(const Pattern& p) : k(p.k()), splits(static_cast<std::size_t>(p.k() + 1) * (p.k() + 1)) {
  require_positive_outerplanar_forest(p);
  auto mand = [&](int x, int y) { return p.at(x, y) == PairClass::Mandatory; };
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      Split& sp = splits[slot(a, b)];
      for (int x = b; x > a && !sp.fwd_j; --x)
        if (mand(a, x)) sp.fwd_j = x;
      if (sp.fwd_j) {
        // smallest vertex of (a, j) joined to j without the edge (a, j); j if none
        Components c = components_without(p, a, sp.fwd_j, a, sp.fwd_j);
        sp.fwd_s = sp.fwd_j;
        for (int x = a + 1; x < sp.fwd_j; ++x)
          if (c.find(x) == c.find(sp.fwd_j)) {
            sp.fwd_s = x;
            break;
          }
      }
      for (int x = a; x < b && !sp.bwd_i; ++x)
        if (mand(x, b)) sp.bwd_i = x;
      if (sp.bwd_i) {
        // largest vertex of (i, b) joined to i without the edge (i, b); i if none
        Components c = components_without(p, sp.bwd_i, b, sp.bwd_i, b);
        sp.bwd_t = sp.bwd_i;
        for (int x = b - 1; x > sp.bwd_i; --x)
          if (c.find(x) == c.find(sp.bwd_i)) {
            sp.bwd_t = x;
            break;
          }
      }
    }
  }
  // number the (interval, direction) states the recursion can reach
  ids.assign(splits.size() * 2, -1);
  std::vector<std::tuple<int, int, Direction>> todo{{1, k, Direction::Forward}, {1, k, Direction::Backward}};
  while (!todo.empty()) {
    auto [a, b, d] = todo.back();
    todo.pop_back();
    int& id = ids[slot(a, b) * 2 + (d == Direction::Forward ? 0 : 1)];
    if (id >= 0) continue;
    id = states++;
    if (a == b) continue;
    const Split& sp = at(a, b);
    if (d == Direction::Forward) {
      if (!sp.fwd_j) todo.push_back({a + 1, b, Direction::Forward});
      else {
        todo.push_back({a, sp.fwd_s - 1, Direction::Forward});
        todo.push_back({sp.fwd_s, sp.fwd_j, Direction::Backward});
        todo.push_back({sp.fwd_j, b, Direction::Forward});
      }
    } else {
      if (!sp.bwd_i) todo.push_back({a, b - 1, Direction::Backward});
      else {
        todo.push_back({sp.bwd_i, sp.bwd_t, Direction::Forward});
        todo.push_back({sp.bwd_t + 1, b, Direction::Backward});
        todo.push_back({a, sp.bwd_i, Direction::Backward});
      }
    }
  }
}

BoundaryArrays compute_boundaries(const Pattern& p, const OrderedGraph& g, Direction d) {
  const ForestPlan plan(p);
  ForestSolver solver(g, plan);
  BoundaryArrays out;
  out.direction = d;
  const auto n = static_cast<Vertex>(g.n());
  if (d == Direction::Forward) {
    const Vertex* m = solver.fwd(1, p.k());
    out.m.assign(m, m + n + 2);
    out.best.assign(static_cast<std::size_t>(n) + 2, n + 1);
    Vertex cur = n + 1;
    for (Vertex u = n; u >= 1; --u) {
      out.best[u] = cur;
      cur = std::min(cur, out.m[u]);
    }
  } else {
    const Vertex* m = solver.bwd(1, p.k());
    out.m.assign(m, m + n + 2);
    out.best.assign(static_cast<std::size_t>(n) + 2, 0);
    Vertex cur = 0;
    for (Vertex v = 1; v <= n; ++v) {
      out.best[v] = cur;
      cur = std::max(cur, out.m[v]);
    }
  }
  return out;
}

DetectionReport detect_forest(const OrderedGraph& g, const Pattern& p) { return detect_forest(g, ForestPlan(p)); }

DetectionReport detect_forest(const OrderedGraph& g, const ForestPlan& plan) {
  const char* engine = "forest";
  if (g.n() < static_cast<std::size_t>(plan.k)) return DetectionReport::not_found(engine);
  ForestSolver solver(g, plan);
  const Vertex* m = solver.fwd(1, plan.k);
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex u = 1; u <= n; ++u) {
    if (m[u] <= n) {
      std::vector<Vertex> pos(static_cast<std::size_t>(plan.k) + 1, 0);
      solver.realize_fwd(1, plan.k, u, pos);
      return DetectionReport::hit({pos.begin() + 1, pos.end()}, engine);
    }
  }
  return DetectionReport::not_found(engine);
}

}  // namespace ordpat
