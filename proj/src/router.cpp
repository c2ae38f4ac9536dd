#include "ordpat/router.hpp"

#include "ordpat/clique_reduce.hpp"
#include "ordpat/forest_detect.hpp"
#include "ordpat/geometry_detect.hpp"
#include "ordpat/merge_engine.hpp"
#include "ordpat/oracle.hpp"
#include "ordpat/p4_detect.hpp"
#include "ordpat/three_vertex.hpp"

namespace ordpat {

namespace {

constexpr std::pair<const char*, Engine> kNames[] = {
    {"auto", Engine::Auto},   {"oracle", Engine::Oracle}, {"three", Engine::Three},       {"clique", Engine::Clique},
    {"merge", Engine::Merge}, {"forest", Engine::Forest}, {"p4", Engine::P4}, {"geometry", Engine::Geometry},
};

bool forest_applies(const Pattern& p) {
  const PatternClass c = classify(p);
  return c.positive && c.outerplanar && c.forest;
}

// Bounded tree when it fits the cap, else nothing.
std::optional<MergeTree> merge_tree_within(const Pattern& p, int cap) {
  if (p.k() > kMaxMergePatternSize) return std::nullopt;
  MergeTree t = build_bounded_tree(p);
  if (t.width() > cap || t.width() > kMaxTupleWidth) return std::nullopt;
  return t;
}

}  // namespace

std::optional<Engine> engine_from_name(std::string_view name) {
  for (auto [n, e] : kNames)
    if (name == n) return e;
  return std::nullopt;
}

const char* engine_name(Engine e) {
  for (auto [n, x] : kNames)
    if (x == e) return n;
  return "?";
}

std::pair<Engine, std::string> route(const Pattern& p, int width_cap) {
  if (p.k() == 3) return {Engine::Three, "three-vertex pattern"};
  if (forest_applies(p)) return {Engine::Forest, "positive outerplanar forest"};
  if (p4_variant_of(p)) return {Engine::P4, "positive P4 ordering"};
  if (auto f = geometry_member(p); f && geometry_supported(*f)) return {Engine::Geometry, "geometric family member"};
  if (merge_tree_within(p, width_cap)) return {Engine::Merge, "merge tree within the width cap"};
  return {Engine::Clique, "merge tree wider than the cap"};
}

DetectionReport detect(const OrderedGraph& g, const Pattern& p, const DetectOptions& opts) {
  Engine e = opts.engine;
  if (p.all_undecided() && e != Engine::Oracle) {
    if (g.n() < static_cast<std::size_t>(p.k())) return DetectionReport::not_found("trivial");
    std::vector<Vertex> w(static_cast<std::size_t>(p.k()));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Vertex>(i + 1);
    return DetectionReport::hit(std::move(w), "trivial");
  }
  if (e == Engine::Auto) e = route(p, opts.width_cap).first;
  switch (e) {
    case Engine::Oracle: {
      OracleOptions o;
      o.size_cap = opts.oracle_cap;
      return brute_detect(g, p, o);
    }
    case Engine::Three:
      if (p.k() != 3) throw Error(ErrorCode::PreconditionViolated, "engine three needs a pattern with k = 3");
      return detect_three(g, p);
    case Engine::Clique:
      return detect_via_clique(g, p);
    case Engine::Merge: {
      DpOptions d;
      d.width_cap = opts.width_cap;
      return detect_via_merge(g, p, d);
    }
    case Engine::Forest:
      return detect_forest(g, p);
    case Engine::P4: {
      auto v = p4_variant_of(p);
      if (!v) throw Error(ErrorCode::PreconditionViolated, "pattern is not a positive P4 ordering");
      return detect_positive_p4(g, v->first, v->second);
    }
    case Engine::Geometry: {
      auto f = geometry_member(p);
      if (!f) throw Error(ErrorCode::PreconditionViolated, "pattern is not in the geometric family");
      if (!geometry_supported(*f)) {
        throw Error(ErrorCode::PreconditionViolated, "no dedicated detector for forbidden set '" + *f + "'");
      }
      return detect_geometry(g, *f);
    }
    case Engine::Auto:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown engine");
}

}  // namespace ordpat
