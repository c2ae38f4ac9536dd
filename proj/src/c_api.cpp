#include "ordpat/ordpat.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ordpat/clique_reduce.hpp"
#include "ordpat/generate.hpp"
#include "ordpat/geometry_detect.hpp"
#include "ordpat/merge_engine.hpp"
#include "ordpat/p4_detect.hpp"
#include "ordpat/router.hpp"

struct ordpat_graph {
  ordpat::OrderedGraph g;
};
struct ordpat_pattern {
  ordpat::Pattern p;
};
struct ordpat_report {
  ordpat::DetectionReport r;
  std::string requested;
  double millis = 0;
  std::size_t n = 0, m = 0;
  int k = 0;
};

namespace {

thread_local std::string g_last_error;

ordpat_status status_of(ordpat::ErrorCode c) {
  using ordpat::ErrorCode;
  switch (c) {
    case ErrorCode::Ok: return ORDPAT_OK;
    case ErrorCode::MalformedLine:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::SelfLoop:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::ConflictingPair: return ORDPAT_ERR_PARSE;
    case ErrorCode::InvalidArgument: return ORDPAT_ERR_INVALID_ARGUMENT;
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::WidthCapExceeded: return ORDPAT_ERR_CAP;
    case ErrorCode::PreconditionViolated: return ORDPAT_ERR_PRECONDITION;
    case ErrorCode::InvalidTree: return ORDPAT_ERR_INVALID_TREE;
    case ErrorCode::Io: return ORDPAT_ERR_IO;
  }
  return ORDPAT_ERR_INTERNAL;
}

ordpat_status fail(ordpat_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
ordpat_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return ORDPAT_OK;
  } catch (const ordpat::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ORDPAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ORDPAT_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ordpat::Error(ordpat::ErrorCode::Io, std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9' || v > 100000) return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

ordpat::Pattern pattern_named(std::string_view name) {
  using namespace ordpat;
  if (auto id = catalog_id_by_name(name)) return catalog_pattern(*id);
  if (name.starts_with("flat-cycle-")) {
    int k = 0;
    if (parse_int(name.substr(11), k) && k >= 3) return flat_cycle(k);
  }
  if (name == "p-empty") return geometry_pattern("");
  if (name.starts_with("p-") && name.size() > 2 && name.size() <= 6 &&
      name.substr(2).find_first_not_of("abcd") == std::string_view::npos) {
    return geometry_pattern(name.substr(2));
  }
  if (name.starts_with("p4-")) {
    auto rest = name.substr(3);
    const bool mirrored = !rest.empty() && rest.back() == 'm';
    if (mirrored) rest.remove_suffix(1);
    int v = 0;
    if (parse_int(rest, v) && v >= 1 && v <= kP4Variants) return p4_pattern(v, mirrored);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pattern name '" + std::string(name) + "'");
}

}  // namespace

extern "C" {

const char* ordpat_last_error(void) { return g_last_error.c_str(); }

const char* ordpat_status_name(ordpat_status s) {
  switch (s) {
    case ORDPAT_OK: return "ok";
    case ORDPAT_ERR_PARSE: return "parse error";
    case ORDPAT_ERR_IO: return "i/o error";
    case ORDPAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ORDPAT_ERR_PRECONDITION: return "precondition violated";
    case ORDPAT_ERR_CAP: return "cap exceeded";
    case ORDPAT_ERR_INVALID_TREE: return "invalid merge tree";
    case ORDPAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void ordpat_string_free(char* s) { std::free(s); }

ordpat_status ordpat_graph_parse(const char* text, size_t len, ordpat_graph** out) {
  if (!text || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordpat_graph{ordpat::parse_ordered_graph({text, len})}; });
}

ordpat_status ordpat_graph_load(const char* path, ordpat_graph** out) {
  if (!path || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    try {
      *out = new ordpat_graph{ordpat::parse_ordered_graph(read_file(path))};
    } catch (const ordpat::ParseError& e) {
      throw ordpat::Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

ordpat_status ordpat_graph_from_edges(size_t n, const uint32_t* edges, size_t m, ordpat_graph** out) {
  if ((!edges && m) || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<ordpat::Edge> e(m);
    for (size_t i = 0; i < m; ++i) e[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new ordpat_graph{ordpat::OrderedGraph::from_edges(n, e)};
  });
}

ordpat_status ordpat_graph_generate(const char* model, size_t n, size_t m, double density, uint64_t seed,
                                    ordpat_graph** out) {
  if (!model || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string_view md(model);
    if (md == "gnm") *out = new ordpat_graph{ordpat::generate_gnm(n, m, seed)};
    else if (md == "gnp") *out = new ordpat_graph{ordpat::generate_gnp(n, density, seed)};
    else throw ordpat::Error(ordpat::ErrorCode::InvalidArgument, "unknown model '" + std::string(md) + "'");
  });
}

size_t ordpat_graph_n(const ordpat_graph* g) { return g ? g->g.n() : 0; }
size_t ordpat_graph_m(const ordpat_graph* g) { return g ? g->g.m() : 0; }

ordpat_status ordpat_graph_render(const ordpat_graph* g, char** out) {
  if (!g || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(ordpat::render_ordered_graph(g->g)); });
}

void ordpat_graph_free(ordpat_graph* g) { delete g; }

ordpat_status ordpat_pattern_parse(const char* text, size_t len, ordpat_pattern** out) {
  if (!text || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordpat_pattern{ordpat::parse_pattern({text, len})}; });
}

ordpat_status ordpat_pattern_load(const char* path, ordpat_pattern** out) {
  if (!path || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    try {
      *out = new ordpat_pattern{ordpat::parse_pattern(read_file(path))};
    } catch (const ordpat::ParseError& e) {
      throw ordpat::Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

ordpat_status ordpat_pattern_by_name(const char* name, ordpat_pattern** out) {
  if (!name || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordpat_pattern{pattern_named(name)}; });
}

ordpat_status ordpat_pattern_p4(int variant, int mirrored, ordpat_pattern** out) {
  if (!out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordpat_pattern{ordpat::p4_pattern(variant, mirrored != 0)}; });
}

int ordpat_pattern_k(const ordpat_pattern* p) { return p ? p->p.k() : 0; }

ordpat_status ordpat_pattern_render(const ordpat_pattern* p, char** out) {
  if (!p || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(ordpat::render_pattern(p->p)); });
}

void ordpat_pattern_free(ordpat_pattern* p) { delete p; }

ordpat_status ordpat_detect(const ordpat_graph* g, const ordpat_pattern* p, const ordpat_options* opts,
                            ordpat_report** out) {
  if (!g || !p || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ordpat::DetectOptions o;
    std::string requested = "auto";
    if (opts) {
      if (opts->engine) requested = opts->engine;
      if (opts->width_cap > 0) o.width_cap = opts->width_cap;
      if (opts->oracle_cap > 0) o.oracle_cap = opts->oracle_cap;
    }
    auto e = ordpat::engine_from_name(requested);
    if (!e) throw ordpat::Error(ordpat::ErrorCode::InvalidArgument, "unknown engine '" + requested + "'");
    o.engine = *e;
    const auto t0 = std::chrono::steady_clock::now();
    auto r = ordpat::detect(g->g, p->p, o);
    const auto t1 = std::chrono::steady_clock::now();
    auto* rep = new ordpat_report;
    rep->r = std::move(r);
    rep->requested = requested;
    rep->millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep->n = g->g.n();
    rep->m = g->g.m();
    rep->k = p->p.k();
    *out = rep;
  });
}

ordpat_status ordpat_route(const ordpat_pattern* p, int width_cap, char** engine, char** reason) {
  if (!p || !engine) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto [e, why] = ordpat::route(p->p, width_cap > 0 ? width_cap : 6);
    *engine = dup(ordpat::engine_name(e));
    if (reason) *reason = dup(why);
  });
}

int ordpat_report_found(const ordpat_report* r) { return r && r->r.found ? 1 : 0; }
size_t ordpat_report_witness_size(const ordpat_report* r) { return r ? r->r.witness.size() : 0; }

size_t ordpat_report_witness(const ordpat_report* r, uint32_t* buf, size_t cap) {
  if (!r) return 0;
  const auto& w = r->r.witness;
  for (size_t i = 0; i < w.size() && i < cap && buf; ++i) buf[i] = w[i];
  return w.size();
}

const char* ordpat_report_engine(const ordpat_report* r) { return r ? r->r.engine.c_str() : ""; }
double ordpat_report_millis(const ordpat_report* r) { return r ? r->millis : 0.0; }

ordpat_status ordpat_report_json(const ordpat_report* r, char** out) {
  if (!r || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    nlohmann::json j;
    j["schema"] = 1;
    j["found"] = r->r.found;
    j["witness"] = r->r.witness;
    j["engine"] = r->r.engine;
    j["requested_engine"] = r->requested;
    j["graph"] = {{"n", r->n}, {"m", r->m}};
    j["pattern"] = {{"k", r->k}};
    j["timings"] = {{"detect_ms", r->millis}};
    *out = dup(j.dump());
  });
}

void ordpat_report_free(ordpat_report* r) { delete r; }

ordpat_status ordpat_is_realization(const ordpat_graph* g, const ordpat_pattern* p, const uint32_t* positions,
                                    size_t k, int* ok) {
  if (!g || !p || (!positions && k) || !ok) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *ok = ordpat::is_realization(g->g, std::span<const ordpat::Vertex>(positions, k), p->p) ? 1 : 0;
  });
}

ordpat_status ordpat_emit_reduction(const ordpat_graph* g, const ordpat_pattern* p, char** out) {
  if (!g || !p || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(ordpat::render_layered_graph(ordpat::reduce_to_clique(g->g, p->p))); });
}

ordpat_status ordpat_dump_tree(const ordpat_pattern* p, char** out) {
  if (!p || !out) return fail(ORDPAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(ordpat::dump_tree(ordpat::build_bounded_tree(p->p))); });
}

}  // extern "C"
