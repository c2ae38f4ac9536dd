#include "ordpat/geometry_detect.hpp"

#include <algorithm>
#include <vector>

namespace ordpat {

namespace {

void count(ScanStats* stats, std::size_t k) {
  if (stats) stats->add(k);
}

DetectionReport with_engine(DetectionReport r, const char* engine) {
  r.engine = engine;
  return r;
}

DetectionReport mirrored(const OrderedGraph& g, DetectionReport (*detect)(const OrderedGraph&, ScanStats*),
                         ScanStats* stats, const char* engine) {
  const OrderedGraph mg = mirror_graph(g);
  count(stats, 2 * g.m() + g.n());
  DetectionReport r = detect(mg, stats);
  if (r.found) r.witness = mirror_positions(r.witness, g.n());
  return with_engine(std::move(r), engine);
}

std::vector<Vertex> max_successors(const OrderedGraph& g) {
  std::vector<Vertex> out(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    auto s = g.succ(v);
    out[v] = s.empty() ? 0 : s.back();
  }
  return out;
}

}  // namespace

DetectionReport detect_p_empty(const OrderedGraph& g, ScanStats* stats) {
  const char* engine = "geometry:p-empty";
  const auto n = static_cast<Vertex>(g.n());
  std::vector<Edge> stack;
  stack.reserve(g.m());
  for (Vertex p = 1; p <= n; ++p) {
    // close edges ending at p, latest opened first
    auto pred = g.pred(p);
    count(stats, pred.size());
    for (auto it = pred.rbegin(); it != pred.rend(); ++it) {
      const Edge top = stack.back();
      if (top.u != *it || top.v != p) return DetectionReport::hit({*it, top.u, p, top.v}, engine);
      stack.pop_back();
    }
    // open edges starting at p, nearest end on top
    auto succ = g.succ(p);
    count(stats, succ.size());
    for (auto it = succ.rbegin(); it != succ.rend(); ++it) stack.push_back({p, *it});
  }
  return DetectionReport::not_found(engine);
}

DetectionReport detect_p_a(const OrderedGraph& g, ScanStats* stats) {
  const char* engine = "geometry:p-a";
  const auto n = static_cast<Vertex>(g.n());
  const auto far = max_successors(g);
  count(stats, n);
  // active: vertices below i with a neighbor beyond i; stale entries are
  // popped from the back as the scan passes their last neighbor
  std::vector<Vertex> active;
  std::vector<Vertex> target(static_cast<std::size_t>(n) + 1, 0);  // j chosen for i
  std::vector<std::size_t> req_off(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex i = 1; i <= n; ++i) {
    while (!active.empty() && far[active.back()] <= i) active.pop_back();
    auto pred = g.pred(i);
    if (!pred.empty() && !active.empty() && pred.front() < active.back()) {
      target[i] = active.back();
      ++req_off[active.back() + 1];
    }
    if (far[i] > i) active.push_back(i);
  }
  for (std::size_t j = 1; j < req_off.size(); ++j) req_off[j] += req_off[j - 1];
  std::vector<Vertex> requests(req_off.back());
  {
    std::vector<std::size_t> cur(req_off.begin(), req_off.end() - 1);
    for (Vertex i = 1; i <= n; ++i)
      if (target[i]) requests[cur[target[i]]++] = i;
  }
  // check {x in N-(i) : x < j} inside N-(j), one marking of N-(j) per j
  std::vector<Vertex> stamp(static_cast<std::size_t>(n) + 1, 0);
  Vertex best_i = 0, best_x = 0, best_j = 0;
  for (Vertex j = 1; j <= n; ++j) {
    if (req_off[j] == req_off[j + 1]) continue;
    auto pj = g.pred(j);
    count(stats, pj.size());
    for (Vertex x : pj) stamp[x] = j;
    for (std::size_t r = req_off[j]; r < req_off[j + 1]; ++r) {
      const Vertex i = requests[r];
      if (best_i && i >= best_i) break;
      for (Vertex x : g.pred(i)) {
        count(stats, 1);
        if (x >= j) break;
        if (stamp[x] != j) {
          best_i = i;
          best_x = x;
          best_j = j;
          break;
        }
      }
    }
  }
  if (best_i) return DetectionReport::hit({best_x, best_j, best_i, far[best_j]}, engine);
  return DetectionReport::not_found(engine);
}

DetectionReport detect_p_c(const OrderedGraph& g, ScanStats* stats) {
  return mirrored(g, &detect_p_a, stats, "geometry:p-c");
}

DetectionReport detect_p_b(const OrderedGraph& g, ScanStats* stats) {
  const char* engine = "geometry:p-b";
  const auto n = static_cast<Vertex>(g.n());
  const auto far = max_successors(g);
  count(stats, n);
  // vertices grouped by their last neighbor, for removal from ACTIVE
  std::vector<std::size_t> off(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex v = 1; v <= n; ++v)
    if (far[v]) ++off[far[v] + 1];
  for (std::size_t x = 1; x < off.size(); ++x) off[x] += off[x - 1];
  std::vector<Vertex> expire(off.back());
  {
    std::vector<std::size_t> cur(off.begin(), off.end() - 1);
    for (Vertex v = 1; v <= n; ++v)
      if (far[v]) expire[cur[far[v]]++] = v;
  }
  // ACTIVE as a doubly linked list over positions; 0 is the head sentinel
  std::vector<Vertex> prev(static_cast<std::size_t>(n) + 1, 0), next(static_cast<std::size_t>(n) + 1, 0);
  Vertex tail = 0;
  auto unlink = [&](Vertex v) {
    next[prev[v]] = next[v];
    if (next[v]) prev[next[v]] = prev[v];
    else tail = prev[v];
  };
  for (Vertex i = 1; i <= n; ++i) {
    for (std::size_t t = off[i]; t < off[i + 1]; ++t) unlink(expire[t]);
    auto pred = g.pred(i);
    if (!pred.empty()) {
      // walk ACTIVE down from the back alongside N-(i), looking for an
      // active non-neighbor above min N-(i)
      const Vertex low = pred.front();
      std::size_t p = pred.size();
      for (Vertex a = tail; a > low; a = prev[a]) {
        while (p > 0 && pred[p - 1] > a) {
          --p;
          count(stats, 1);
        }
        count(stats, 1);
        if (p > 0 && pred[p - 1] == a) {
          --p;
          continue;
        }
        return DetectionReport::hit({low, a, i, far[a]}, engine);
      }
    }
    if (far[i] > i) {
      prev[i] = tail;
      next[i] = 0;
      next[tail] = i;
      tail = i;
    }
  }
  return DetectionReport::not_found(engine);
}

DetectionReport detect_p_ab(const OrderedGraph& g, ScanStats* stats) {
  const char* engine = "geometry:p-ab";
  const auto n = static_cast<Vertex>(g.n());
  const auto far = max_successors(g);
  std::vector<Vertex> is_nb(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> cand(static_cast<std::size_t>(n) + 1, 0);  // active non-neighbor of i
  std::vector<std::uint32_t> above(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex i = 3; i < n; ++i) {
    auto pred = g.pred(i);
    if (pred.empty()) continue;
    for (Vertex x : pred) is_nb[x] = i;
    // above[x]: active non-neighbors of i in (x, i), for x >= min N-(i)
    above[i - 1] = 0;
    for (Vertex x = i - 1; x >= pred.front(); --x) {
      cand[x] = far[x] > i && is_nb[x] != i ? i : 0;
      if (x + 1 < i) above[x] = above[x + 1] + (cand[x + 1] == i ? 1u : 0u);
    }
    count(stats, i - pred.front());
    for (Vertex alpha : pred) {
      if (above[alpha] == 0) continue;
      std::uint32_t adjacent = 0;
      for (Vertex y : g.succ(alpha)) {
        if (y >= i) break;
        count(stats, 1);
        if (cand[y] == i) ++adjacent;
      }
      if (adjacent < above[alpha]) {
        std::size_t t = 0;
        auto succ = g.succ(alpha);
        for (Vertex beta = alpha + 1; beta < i; ++beta) {
          while (t < succ.size() && succ[t] < beta) ++t;
          if (cand[beta] == i && !(t < succ.size() && succ[t] == beta)) {
            return DetectionReport::hit({alpha, beta, i, far[beta]}, engine);
          }
        }
      }
    }
  }
  return DetectionReport::not_found(engine);
}

DetectionReport detect_p_bc(const OrderedGraph& g, ScanStats* stats) {
  return mirrored(g, &detect_p_ab, stats, "geometry:p-bc");
}

std::optional<std::string> geometry_member(const Pattern& p) {
  if (p.k() != 4) return std::nullopt;
  if (p.at(1, 3) != PairClass::Mandatory || p.at(2, 4) != PairClass::Mandatory) return std::nullopt;
  std::string f;
  const std::pair<char, std::pair<int, int>> named[] = {{'a', {1, 2}}, {'b', {2, 3}}, {'c', {3, 4}}, {'d', {1, 4}}};
  for (const auto& [name, pr] : named) {
    const PairClass c = p.at(pr.first, pr.second);
    if (c == PairClass::Mandatory) return std::nullopt;
    if (c == PairClass::Forbidden) f += name;
  }
  return f;
}

bool geometry_supported(std::string_view f) {
  return f.empty() || f == "a" || f == "b" || f == "c" || f == "ab" || f == "bc";
}

DetectionReport detect_geometry(const OrderedGraph& g, std::string_view f, ScanStats* stats) {
  if (f.empty()) return detect_p_empty(g, stats);
  if (f == "a") return detect_p_a(g, stats);
  if (f == "b") return detect_p_b(g, stats);
  if (f == "c") return detect_p_c(g, stats);
  if (f == "ab") return detect_p_ab(g, stats);
  if (f == "bc") return detect_p_bc(g, stats);
  throw Error(ErrorCode::InvalidArgument, "no dedicated detector for forbidden set '" + std::string(f) + "'");
}

}  // namespace ordpat
