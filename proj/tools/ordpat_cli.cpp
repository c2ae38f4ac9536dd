// ordpat: detect ordered patterns in ordered graphs from the command line.
// Talks to the library only through the C API.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordpat/ordpat.h"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitEngine = 3;
constexpr int kExitDisagree = 4;

struct GraphDel {
  void operator()(ordpat_graph* g) const { ordpat_graph_free(g); }
};
struct PatternDel {
  void operator()(ordpat_pattern* p) const { ordpat_pattern_free(p); }
};
struct ReportDel {
  void operator()(ordpat_report* r) const { ordpat_report_free(r); }
};
struct StringDel {
  void operator()(char* s) const { ordpat_string_free(s); }
};
using GraphPtr = std::unique_ptr<ordpat_graph, GraphDel>;
using PatternPtr = std::unique_ptr<ordpat_pattern, PatternDel>;
using ReportPtr = std::unique_ptr<ordpat_report, ReportDel>;
using StringPtr = std::unique_ptr<char, StringDel>;

// Carries the process exit code out of a failed step.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& what) {
  std::cerr << "ordpat: " << what << "\n";
  throw Exit{code};
}

void check(ordpat_status s, int code, const std::string& ctx) {
  if (s != ORDPAT_OK) die(code, ctx + ": " + ordpat_last_error());
}

int exit_for_load(ordpat_status s) {
  return s == ORDPAT_ERR_PARSE || s == ORDPAT_ERR_IO ? kExitParse : kExitEngine;
}

GraphPtr load_graph(const std::string& path) {
  ordpat_graph* g = nullptr;
  const auto s = ordpat_graph_load(path.c_str(), &g);
  check(s, exit_for_load(s), "graph");
  return GraphPtr(g);
}

struct PatternArgs {
  std::string path;
  std::string name;
  int p4_variant = 0;
  bool mirrored = false;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("--pattern", path, "Pattern file");
    auto* nm = cmd->add_option("--pattern-name", name, "Named pattern (chordal, flat-cycle-4, p-a, p4-3m, ...)");
    auto* p4 = cmd->add_option("--p4-variant", p4_variant, "Positive P4 ordering 1..8")->check(CLI::Range(1, 8));
    cmd->add_flag("--mirrored", mirrored, "Mirror the --p4-variant ordering");
    file->excludes(nm)->excludes(p4);
    nm->excludes(p4);
  }

  PatternPtr load() const {
    ordpat_pattern* p = nullptr;
    ordpat_status s;
    if (!path.empty()) s = ordpat_pattern_load(path.c_str(), &p);
    else if (!name.empty()) s = ordpat_pattern_by_name(name.c_str(), &p);
    else if (p4_variant) s = ordpat_pattern_p4(p4_variant, mirrored, &p);
    else die(kExitParse, "one of --pattern, --pattern-name or --p4-variant is required");
    check(s, kExitParse, "pattern");
    return PatternPtr(p);
  }
};

ReportPtr run(const ordpat_graph* g, const ordpat_pattern* p, const std::string& engine, int width_cap,
              int oracle_cap = 0) {
  ordpat_options o{engine.c_str(), width_cap, oracle_cap};
  ordpat_report* r = nullptr;
  const auto s = ordpat_detect(g, p, &o, &r);
  if (s == ORDPAT_ERR_INVALID_ARGUMENT && std::string(ordpat_last_error()).starts_with("unknown engine")) {
    die(kExitParse, ordpat_last_error());
  }
  check(s, kExitEngine, "detect");
  return ReportPtr(r);
}

std::vector<uint32_t> witness(const ordpat_report* r) {
  std::vector<uint32_t> w(ordpat_report_witness_size(r));
  ordpat_report_witness(r, w.data(), w.size());
  return w;
}

std::string verdict_line(const ordpat_report* r) {
  if (!ordpat_report_found(r)) return "NOT-FOUND";
  std::string s = "FOUND";
  for (auto v : witness(r)) s += " " + std::to_string(v);
  return s;
}

// Calls f(&out) and takes ownership of the returned string.
template <class F>
std::string take(F&& f, int code, const std::string& ctx) {
  char* str = nullptr;
  check(f(&str), code, ctx);
  StringPtr hold(str);
  return hold.get();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) die(kExitEngine, "cannot write " + path);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_detect(const std::string& graph_path, const PatternArgs& pa, const std::string& engine, int width_cap,
               bool json, bool exit_code, const std::string& reduction_path, bool dump) {
  auto g = load_graph(graph_path);
  auto p = pa.load();
  if (dump) {
    std::cerr << take([&](char** o) { return ordpat_dump_tree(p.get(), o); }, kExitEngine, "dump-tree") << "\n";
  }
  if (!reduction_path.empty()) {
    write_text(reduction_path, take([&](char** o) { return ordpat_emit_reduction(g.get(), p.get(), o); }, kExitEngine, "reduction"));
  }
  auto r = run(g.get(), p.get(), engine, width_cap);
  if (json) {
    std::cout << take([&](char** o) { return ordpat_report_json(r.get(), o); }, kExitEngine, "json") << "\n";
  } else {
    std::cout << verdict_line(r.get()) << "\n";
  }
  return exit_code ? ordpat_report_found(r.get()) : 0;
}

int cmd_verify(const std::string& graph_path, const PatternArgs& pa, const std::string& engines_arg, int width_cap,
               int oracle_cap) {
  auto g = load_graph(graph_path);
  auto p = pa.load();
  auto engines = split_list(engines_arg);
  if (std::find(engines.begin(), engines.end(), "oracle") == engines.end()) engines.push_back("oracle");
  auto reference = run(g.get(), p.get(), "oracle", width_cap, oracle_cap);
  const int expect = ordpat_report_found(reference.get());
  bool agree = true;
  for (const auto& e : engines) {
    auto r = run(g.get(), p.get(), e, width_cap, oracle_cap);
    const int got = ordpat_report_found(r.get());
    int sound = 1;
    if (got) {
      auto w = witness(r.get());
      check(ordpat_is_realization(g.get(), p.get(), w.data(), w.size(), &sound), kExitEngine, "witness check");
    }
    std::cout << e << " (" << ordpat_report_engine(r.get()) << "): " << verdict_line(r.get())
              << (sound ? "" : " [invalid witness]") << "\n";
    if (got != expect || !sound) agree = false;
  }
  if (agree) {
    std::cout << "AGREE " << (expect ? "FOUND" : "NOT-FOUND") << "\n";
    return 0;
  }
  std::cout << "DISAGREE\n# graph\n" << take([&](char** o) { return ordpat_graph_render(g.get(), o); }, kExitEngine, "render");
  std::cout << "# pattern\n" << take([&](char** o) { return ordpat_pattern_render(p.get(), o); }, kExitEngine, "render");
  return kExitDisagree;
}

int cmd_gen(std::size_t n, std::optional<std::size_t> m, std::optional<double> density, const std::string& model,
            uint64_t seed, const std::string& out) {
  ordpat_graph* g = nullptr;
  if (model == "gnm" && !m) die(kExitParse, "gnm needs --m");
  if (model == "gnp" && !density) die(kExitParse, "gnp needs --density");
  check(ordpat_graph_generate(model.c_str(), n, m.value_or(0), density.value_or(0.0), seed, &g), kExitParse, "gen");
  GraphPtr hold(g);
  write_text(out, take([&](char** o) { return ordpat_graph_render(g, o); }, kExitEngine, "render"));
  return 0;
}

int cmd_bench(const PatternArgs& pa, const std::string& sizes_arg, const std::string& engine, uint64_t seed,
              int width_cap, bool ratio) {
  auto p = pa.load();
  std::cout << "n,m,millis\n";
  std::vector<double> medians;
  for (const auto& tok : split_list(sizes_arg)) {
    std::size_t n = 0;
    try {
      n = std::stoull(tok);
    } catch (const std::exception&) {
      die(kExitParse, "bad size '" + tok + "'");
    }
    const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
    const std::size_t m = std::min(5 * n, pairs);
    ordpat_graph* g = nullptr;
    check(ordpat_graph_generate("gnm", n, m, 0.0, seed, &g), kExitEngine, "gen");
    GraphPtr hold(g);
    std::vector<double> runs;
    for (int rep = 0; rep < 5; ++rep) runs.push_back(ordpat_report_millis(run(g, p.get(), engine, width_cap).get()));
    std::sort(runs.begin(), runs.end());
    medians.push_back(runs[2]);
    std::cout << n << "," << m << "," << runs[2] << "\n";
  }
  if (ratio && medians.size() >= 2 && medians.front() > 0) {
    std::cout << "# ratio " << medians.back() / medians.front() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered pattern detection"};
  app.require_subcommand(1);

  std::string graph_path, engine = "auto", engines = "oracle", reduction, model = "gnm", out = "-", sizes;
  int width_cap = 6, oracle_cap = 8;
  bool json = false, exit_code = false, dump = false, ratio = false;
  uint64_t seed = 1;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::optional<double> density;
  const std::vector<std::string> engine_names{"auto", "oracle", "three", "clique", "merge", "forest", "p4", "geometry"};

  PatternArgs detect_pat, verify_pat, bench_pat;

  auto* detect = app.add_subcommand("detect", "Search one pattern in one graph");
  detect->add_option("--graph", graph_path, "Graph file")->required();
  detect_pat.attach(detect);
  detect->add_option("--engine", engine, "Detection engine")->check(CLI::IsMember(engine_names));
  detect->add_option("--width-cap", width_cap, "Largest merge-tree width the merge engine accepts");
  detect->add_flag("--json", json, "Print the structured report");
  detect->add_flag("--exit-code", exit_code, "Exit 1 when found, 0 when not");
  detect->add_option("--emit-reduction", reduction, "Write the clique instance to a file ('-' for stdout)");
  detect->add_flag("--dump-tree", dump, "Print the bounded merge tree to stderr");

  auto* verify = app.add_subcommand("verify", "Compare engines against the oracle");
  verify->add_option("--graph", graph_path, "Graph file")->required();
  verify_pat.attach(verify);
  verify->add_option("--engines", engines, "Comma separated engine list")
      ->check([&](const std::string& s) -> std::string {
        for (const auto& e : split_list(s))
          if (std::find(engine_names.begin(), engine_names.end(), e) == engine_names.end()) {
            return "unknown engine '" + e + "'";
          }
        return {};
      });
  verify->add_option("--width-cap", width_cap, "Merge engine width cap");
  verify->add_option("--oracle-cap", oracle_cap, "Largest pattern the oracle accepts");

  auto* gen = app.add_subcommand("gen", "Generate a random ordered graph");
  gen->add_option("--n", n, "Vertices")->required();
  gen->add_option("--m", m, "Edges (gnm)");
  gen->add_option("--density", density, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--model", model, "gnm or gnp")->check(CLI::IsMember({"gnm", "gnp"}));
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", out, "Output file ('-' for stdout)");

  auto* bench = app.add_subcommand("bench", "Time one engine on G(n, 5n) instances");
  bench_pat.attach(bench);
  bench->add_option("--sizes", sizes, "Comma separated vertex counts");
  bench->add_option("--engine", engine, "Detection engine")->check(CLI::IsMember(engine_names));
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--width-cap", width_cap, "Merge engine width cap");
  bench->add_flag("--ratio", ratio, "Append the last/first median ratio as a comment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*detect) return cmd_detect(graph_path, detect_pat, engine, width_cap, json, exit_code, reduction, dump);
    if (*verify) return cmd_verify(graph_path, verify_pat, engines, width_cap, oracle_cap);
    if (*gen) return cmd_gen(n, m, density, model, seed, out);
    if (*bench) return cmd_bench(bench_pat, sizes, engine, seed, width_cap, ratio);
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
