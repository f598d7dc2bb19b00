// Copyright 2026 The smlg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// smlg: match patterns against plain text and level DAGs with classical and
// simulated-quantum engines; generate, cross-verify, and benchmark instances.
//
// Exit codes: 0 success, 1 usage error, 2 file or parse error,
// 3 verification failure.

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minimize.hpp"
#include "smlg.h"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using smlg_tools::GraphPtr;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFile = 2;
constexpr int kExitVerification = 3;

int exit_for(smlg_status status) {
  switch (status) {
    case SMLG_OK:
      return kExitOk;
    case SMLG_ERR_USAGE:
      return kExitUsage;
    case SMLG_ERR_PARSE:
      return kExitFile;
    default:
      // State corruption means a run failed its internal verification.
      return kExitVerification;
  }
}

[[nodiscard]] int fail_status(const std::string& context, smlg_status status) {
  std::cerr << "smlg: " << context << ": " << smlg_last_error() << "\n";
  return exit_for(status);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  return bool(out);
}

/// First nonempty, non-comment line of a text/pattern file, trimmed.
std::string first_payload_line(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                             line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (!line.empty() && line[0] != '#') return line;
  }
  return "";
}

/// Seed precedence: --seed flag, then SMLG_SEED, then 0. Returns false (with
/// a message) when the environment value does not parse.
bool resolve_seed(const std::optional<uint64_t>& flag, uint64_t& out) {
  if (flag) {
    out = *flag;
    return true;
  }
  if (const char* env = std::getenv("SMLG_SEED")) {
    std::string_view text(env);
    auto result = std::from_chars(text.data(), text.data() + text.size(), out);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
      std::cerr << "smlg: SMLG_SEED is not an unsigned integer: '" << text
                << "'\n";
      return false;
    }
    return true;
  }
  out = 0;
  return true;
}

void trace_to_stderr(const char* line, void*) {
  std::cerr << line << "\n";
}

/// Flags shared by the two match subcommands.
struct MatchFlags {
  std::string engine;
  int c = 10;
  std::optional<uint64_t> seed;
  std::string pad = "substates";
  bool check_invariants = false;
  bool trace = false;
  std::string report;  // "", "human", or "json"
  bool timings = false;
};

void add_match_flags(CLI::App& cmd, MatchFlags& flags,
                     const std::vector<std::string>& engines, bool is_dag) {
  cmd.add_option("--engine", flags.engine, "matching engine")
      ->required()
      ->check(CLI::IsMember(engines));
  cmd.add_option("--c", flags.c, "amplification round budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", flags.seed, "RNG seed (default: $SMLG_SEED or 0)");
  if (is_dag)
    cmd.add_option("--pad", flags.pad,
                   "padding for non-power-of-two pattern lengths")
        ->capture_default_str()
        ->check(CLI::IsMember({"substates", "classical"}));
  cmd.add_flag("--check-invariants", flags.check_invariants,
               "run per-step reference checks during quantum-sim runs");
  cmd.add_flag("--trace", flags.trace, "write the gate trace to stderr");
  cmd.add_option("--report", flags.report, "emit a run report on stdout")
      ->check(CLI::IsMember({"human", "json"}));
  cmd.add_flag("--timings", flags.timings, "include wall time in reports");
}

bool make_options(const MatchFlags& flags, smlg_options& opt) {
  smlg_options_init(&opt);
  opt.c = flags.c;
  if (!resolve_seed(flags.seed, opt.seed)) return false;
  opt.pad_mode =
      flags.pad == "classical" ? SMLG_PAD_CLASSICAL : SMLG_PAD_SUBSTATES;
  opt.check_invariants = flags.check_invariants ? 1 : 0;
  if (flags.trace) opt.trace_fn = trace_to_stderr;
  return true;
}

void emit_report(const MatchFlags& flags, const json& report) {
  if (flags.report == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (flags.report == "human") {
    for (const auto& [key, value] : report.items()) {
      std::cout << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  }
}

json result_report(const smlg_result& result, bool include_end) {
  json r;
  r["answer"] = result.answer ? "yes" : "no";
  if (include_end) r["end_position"] = result.end_position;
  r["gate_ops"] = result.gate_ops;
  r["grover_ops"] = result.grover_ops;
  r["rounds_used"] = result.rounds_used;
  r["marked_tracks"] = result.marked_tracks;
  r["track_count"] = result.track_count;
  r["invariant_checks"] = result.invariant_checks;
  r["invariant_violations"] = result.invariant_violations;
  return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------- match --

int run_match_text(const std::string& text_path,
                   const std::string& pattern_path, const MatchFlags& flags) {
  auto text_file = read_file(text_path);
  if (!text_file) {
    std::cerr << "smlg: cannot open text file: " << text_path << "\n";
    return kExitFile;
  }
  auto pattern_file = read_file(pattern_path);
  if (!pattern_file) {
    std::cerr << "smlg: cannot open pattern file: " << pattern_path << "\n";
    return kExitFile;
  }
  std::string text = first_payload_line(*text_file);
  std::string pattern = first_payload_line(*pattern_file);
  smlg_options opt;
  if (!make_options(flags, opt)) return kExitUsage;

  auto start = std::chrono::steady_clock::now();
  smlg_result result;
  smlg_status status =
      smlg_match_text(text.c_str(), pattern.c_str(), flags.engine.c_str(),
                      &opt, &result);
  if (status != SMLG_OK) return fail_status("match-text", status);
  double wall = elapsed_ms(start);

  if (result.answer && result.end_position >= 0)
    std::cout << "yes " << result.end_position << "\n";
  else
    std::cout << (result.answer ? "yes" : "no") << "\n";

  json report;
  report["command"] = "match-text";
  report["engine"] = flags.engine;
  report["text"] = text_path;
  report["pattern"] = pattern_path;
  report["seed"] = opt.seed;
  report["c"] = opt.c;
  report.update(result_report(result, /*include_end=*/true));
  if (flags.timings) report["wall_ms"] = wall;
  emit_report(flags, report);

  if (result.invariant_violations > 0) {
    std::cerr << "smlg: " << result.invariant_violations
              << " invariant violation(s) detected\n";
    return kExitVerification;
  }
  return kExitOk;
}

int run_match_dag(const std::string& graph_path,
                  const std::string& pattern_path, const MatchFlags& flags) {
  auto graph_file = read_file(graph_path);
  if (!graph_file) {
    std::cerr << "smlg: cannot open graph file: " << graph_path << "\n";
    return kExitFile;
  }
  auto pattern_file = read_file(pattern_path);
  if (!pattern_file) {
    std::cerr << "smlg: cannot open pattern file: " << pattern_path << "\n";
    return kExitFile;
  }

  smlg_graph* raw = nullptr;
  if (smlg_status s = smlg_graph_parse(graph_file->c_str(), &raw); s != SMLG_OK)
    return fail_status(graph_path, s);
  GraphPtr graph(raw);

  int32_t* symbols = nullptr;
  size_t pattern_len = 0;
  std::string pattern_line = first_payload_line(*pattern_file);
  if (smlg_status s =
          smlg_pattern_parse(pattern_line.c_str(), &symbols, &pattern_len);
      s != SMLG_OK)
    return fail_status(pattern_path, s);
  std::vector<int32_t> pattern(symbols, symbols + pattern_len);
  smlg_free(symbols);

  smlg_options opt;
  if (!make_options(flags, opt)) return kExitUsage;

  auto start = std::chrono::steady_clock::now();
  smlg_result result;
  smlg_status status =
      smlg_match_dag(graph.get(), pattern.data(), pattern.size(),
                     flags.engine.c_str(), &opt, &result);
  if (status != SMLG_OK) return fail_status("match-dag", status);
  double wall = elapsed_ms(start);

  std::cout << (result.answer ? "yes" : "no") << "\n";

  json report;
  report["command"] = "match-dag";
  report["engine"] = flags.engine;
  report["graph"] = graph_path;
  report["pattern"] = pattern_path;
  report["seed"] = opt.seed;
  report["c"] = opt.c;
  report["pad"] = flags.pad;
  report.update(result_report(result, /*include_end=*/false));
  if (flags.timings) report["wall_ms"] = wall;
  emit_report(flags, report);

  if (result.invariant_violations > 0) {
    std::cerr << "smlg: " << result.invariant_violations
              << " invariant violation(s) detected\n";
    return kExitVerification;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ gen --

struct GenFlags {
  std::string out_dir;
  size_t count = 1;
  size_t nodes = 12;
  size_t levels = 4;
  double density = 0.3;
  size_t alphabet = 3;
  size_t pattern_length = 4;
  std::string planted = "mix";
  std::optional<uint64_t> seed;
};

int run_gen(const GenFlags& flags) {
  uint64_t seed = 0;
  if (!resolve_seed(flags.seed, seed)) return kExitUsage;
  std::error_code ec;
  fs::create_directories(flags.out_dir, ec);
  if (ec) {
    std::cerr << "smlg: cannot create directory: " << flags.out_dir << "\n";
    return kExitFile;
  }
  for (size_t k = 0; k < flags.count; ++k) {
    smlg_gen_params params;
    smlg_gen_params_init(&params);
    params.node_count = flags.nodes;
    params.level_count = flags.levels;
    params.edge_density = flags.density;
    params.alphabet_size = flags.alphabet;
    params.seed = seed + k;

    smlg_graph* raw = nullptr;
    if (smlg_status s = smlg_gen_level_dag(&params, &raw); s != SMLG_OK)
      return fail_status("gen", s);
    GraphPtr graph(raw);

    bool planted = flags.planted == "yes" ||
                   (flags.planted == "mix" && k % 2 == 0);
    int32_t* symbols = nullptr;
    size_t len = 0;
    if (smlg_status s =
            smlg_gen_pattern(graph.get(), planted ? 1 : 0,
                             flags.pattern_length, seed + k, &symbols, &len);
        s != SMLG_OK)
      return fail_status("gen", s);
    std::vector<int32_t> pattern(symbols, symbols + len);
    smlg_free(symbols);

    char* serialized = nullptr;
    if (smlg_status s = smlg_graph_serialize(graph.get(), &serialized);
        s != SMLG_OK)
      return fail_status("gen", s);
    std::string graph_text(serialized);
    smlg_free(serialized);

    char* pattern_text = nullptr;
    if (smlg_status s =
            smlg_pattern_format(pattern.data(), pattern.size(), &pattern_text);
        s != SMLG_OK)
      return fail_status("gen", s);
    std::string pattern_line(pattern_text);
    smlg_free(pattern_text);

    char stem[32];
    std::snprintf(stem, sizeof stem, "instance_%04zu", k);
    fs::path ldag = fs::path(flags.out_dir) / (std::string(stem) + ".ldag");
    fs::path pat = fs::path(flags.out_dir) / (std::string(stem) + ".pat");
    if (!write_file(ldag.string(), graph_text) ||
        !write_file(pat.string(), pattern_line + "\n")) {
      std::cerr << "smlg: cannot write instance files in " << flags.out_dir
                << "\n";
      return kExitFile;
    }
    std::cout << stem << " nodes=" << smlg_graph_node_count(graph.get())
              << " edges=" << smlg_graph_edge_count(graph.get())
              << " pattern=" << pattern_line
              << " planted=" << (planted ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify --

struct VerifyFlags {
  std::string corpus;
  int c = 10;
  std::optional<uint64_t> seed;
  std::string report;
  bool timings = false;
};

/// One engine-vs-reference comparison that can fail and be minimized.
enum class CheckKind {
  kEnumVsDp,
  kShiftAndVsDp,
  kQuantumSubstates,
  kQuantumClassical,
};

const char* check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::kEnumVsDp:
      return "enum-vs-dp";
    case CheckKind::kShiftAndVsDp:
      return "shift-and-vs-dp";
    case CheckKind::kQuantumSubstates:
      return "quantum-substates-vs-dp";
    case CheckKind::kQuantumClassical:
      return "quantum-classical-vs-dp";
  }
  return "unknown";
}

struct CheckOutcome {
  bool ok = true;
  std::string detail;
  unsigned long long invariant_checks = 0;
};

/// Runs one comparison. For the quantum engines agreement means: the
/// deterministic marked-track set is nonempty exactly when the reference
/// matcher accepts, and no invariant check failed.
CheckOutcome run_check(CheckKind kind, const smlg_graph* g,
                       const std::vector<int32_t>& pattern, uint64_t seed,
                       int c) {
  CheckOutcome outcome;
  smlg_result reference;
  if (smlg_status s = smlg_match_dag(g, pattern.data(), pattern.size(), "dp",
                                     nullptr, &reference);
      s != SMLG_OK) {
    outcome.ok = false;
    outcome.detail = std::string("dp failed: ") + smlg_last_error();
    return outcome;
  }

  smlg_options opt;
  smlg_options_init(&opt);
  opt.seed = seed;
  opt.c = c;
  opt.check_invariants = 1;

  auto compare = [&](const char* engine, bool use_marked) {
    smlg_result result;
    if (smlg_status s = smlg_match_dag(g, pattern.data(), pattern.size(),
                                       engine, &opt, &result);
        s != SMLG_OK) {
      outcome.ok = false;
      outcome.detail = std::string(engine) + " failed: " + smlg_last_error();
      return;
    }
    outcome.invariant_checks += result.invariant_checks;
    bool answer = use_marked ? result.marked_tracks > 0 : result.answer != 0;
    if (answer != (reference.answer != 0)) {
      outcome.ok = false;
      outcome.detail = std::string(engine) + " says " +
                       (answer ? "yes" : "no") + ", dp says " +
                       (reference.answer ? "yes" : "no");
    } else if (result.invariant_violations > 0) {
      outcome.ok = false;
      outcome.detail = std::string(engine) + ": " +
                       std::to_string(result.invariant_violations) +
                       " invariant violation(s)";
    }
  };

  switch (kind) {
    case CheckKind::kEnumVsDp:
      if (smlg_graph_node_count(g) <= 12) compare("enum", false);
      break;
    case CheckKind::kShiftAndVsDp:
      compare("shift-and", false);
      break;
    case CheckKind::kQuantumSubstates:
      opt.pad_mode = SMLG_PAD_SUBSTATES;
      compare("quantum-sim", true);
      break;
    case CheckKind::kQuantumClassical:
      opt.pad_mode = SMLG_PAD_CLASSICAL;
      compare("quantum-sim", true);
      break;
  }
  return outcome;
}

struct InstanceResult {
  std::string id;
  bool answer = false;
  bool ok = true;
  CheckKind failed_kind = CheckKind::kEnumVsDp;
  std::string detail;
  unsigned long long checks = 0;
  uint64_t seed = 0;
};

int run_verify(const VerifyFlags& flags) {
  uint64_t base_seed = 0;
  if (!resolve_seed(flags.seed, base_seed)) return kExitUsage;

  std::vector<fs::path> ldag_files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(flags.corpus, ec))
    if (entry.path().extension() == ".ldag") ldag_files.push_back(entry.path());
  if (ec) {
    std::cerr << "smlg: cannot read corpus directory: " << flags.corpus << "\n";
    return kExitFile;
  }
  if (ldag_files.empty()) {
    std::cerr << "smlg: no .ldag instances in " << flags.corpus << "\n";
    return kExitFile;
  }
  std::sort(ldag_files.begin(), ldag_files.end());

  struct Loaded {
    std::string id;
    std::string graph_text;
    std::vector<int32_t> pattern;
  };
  std::vector<Loaded> instances;
  instances.reserve(ldag_files.size());
  for (const auto& path : ldag_files) {
    Loaded inst;
    inst.id = path.stem().string();
    auto graph_file = read_file(path.string());
    fs::path pat_path = path;
    pat_path.replace_extension(".pat");
    auto pat_file = read_file(pat_path.string());
    if (!graph_file || !pat_file) {
      std::cerr << "smlg: missing instance file for " << inst.id << "\n";
      return kExitFile;
    }
    // Parse up front so a corrupt instance is an input error, not a
    // verification failure; the workers re-parse the validated text.
    smlg_graph* probe = nullptr;
    if (smlg_status s = smlg_graph_parse(graph_file->c_str(), &probe);
        s != SMLG_OK)
      return fail_status(path.string(), s);
    smlg_graph_free(probe);
    inst.graph_text = *graph_file;
    int32_t* symbols = nullptr;
    size_t len = 0;
    std::string line = first_payload_line(*pat_file);
    if (smlg_status s = smlg_pattern_parse(line.c_str(), &symbols, &len);
        s != SMLG_OK)
      return fail_status(pat_path.string(), s);
    inst.pattern.assign(symbols, symbols + len);
    smlg_free(symbols);
    instances.push_back(std::move(inst));
  }

  constexpr CheckKind kAllChecks[] = {
      CheckKind::kEnumVsDp,
      CheckKind::kShiftAndVsDp,
      CheckKind::kQuantumSubstates,
      CheckKind::kQuantumClassical,
  };

  // Fan instances out to a small pool; results are reported in instance
  // order after the join, so output stays deterministic.
  std::vector<InstanceResult> results(instances.size());
  auto worker_body = [&](size_t index) {
    const Loaded& inst = instances[index];
    InstanceResult& r = results[index];
    r.id = inst.id;
    r.seed = base_seed + index;
    smlg_graph* raw = nullptr;
    if (smlg_graph_parse(inst.graph_text.c_str(), &raw) != SMLG_OK) {
      r.ok = false;
      r.detail = std::string("parse failed: ") + smlg_last_error();
      return;
    }
    GraphPtr graph(raw);
    smlg_result reference;
    if (smlg_match_dag(graph.get(), inst.pattern.data(), inst.pattern.size(),
                       "dp", nullptr, &reference) != SMLG_OK) {
      r.ok = false;
      r.detail = std::string("dp failed: ") + smlg_last_error();
      return;
    }
    r.answer = reference.answer != 0;
    for (CheckKind kind : kAllChecks) {
      CheckOutcome outcome =
          run_check(kind, graph.get(), inst.pattern, r.seed, flags.c);
      r.checks += outcome.invariant_checks;
      if (!outcome.ok) {
        r.ok = false;
        r.failed_kind = kind;
        r.detail = outcome.detail;
        return;
      }
    }
  };

  unsigned pool_size = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                             4u));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  auto started = std::chrono::steady_clock::now();
  for (unsigned w = 0; w < pool_size; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < instances.size();
           i = next.fetch_add(1))
        worker_body(i);
    });
  for (auto& t : pool) t.join();
  double wall = elapsed_ms(started);

  json report;
  report["command"] = "verify";
  report["corpus"] = flags.corpus;
  report["seed"] = base_seed;
  report["c"] = flags.c;
  json rows = json::array();

  const InstanceResult* first_failure = nullptr;
  size_t failures = 0;
  for (const auto& r : results) {
    if (flags.report.empty())
      std::cout << r.id << " answer=" << (r.answer ? "yes" : "no")
                << " checks=" << r.checks << (r.ok ? " ok" : " FAIL") << "\n";
    if (!r.ok) {
      ++failures;
      if (!first_failure) first_failure = &r;
      std::cerr << "smlg: " << r.id << " [" << check_name(r.failed_kind)
                << "] seed=" << r.seed << ": " << r.detail << "\n";
    }
    json row;
    row["id"] = r.id;
    row["answer"] = r.answer ? "yes" : "no";
    row["invariant_checks"] = r.checks;
    row["ok"] = r.ok;
    if (!r.ok) row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  report["instances"] = std::move(rows);
  report["failures"] = failures;
  if (flags.timings) report["wall_ms"] = wall;
  if (flags.report == "json") std::cout << report.dump(2) << "\n";

  if (!first_failure) {
    std::cout << "verified " << results.size()
              << " instances: all engines agree\n";
    return kExitOk;
  }

  // Shrink the first failing instance and dump a reproducer that still
  // fails under the recorded seed.
  const InstanceResult& failure = *first_failure;
  size_t index = static_cast<size_t>(first_failure - results.data());
  const Loaded& inst = instances[index];
  smlg_graph* raw = nullptr;
  if (smlg_graph_parse(inst.graph_text.c_str(), &raw) == SMLG_OK) {
    GraphPtr graph(raw);
    smlg_tools::Instance start = smlg_tools::instance_from_graph(
        graph.get(), inst.pattern.data(), inst.pattern.size());
    CheckKind kind = failure.failed_kind;
    uint64_t seed = failure.seed;
    int c = flags.c;
    auto still_fails = [kind, seed, c](const smlg_graph* g,
                                       const std::vector<int32_t>& pattern) {
      return !run_check(kind, g, pattern, seed, c).ok;
    };
    try {
      smlg_tools::Instance minimized =
          smlg_tools::minimize_failing(start, still_fails);
      GraphPtr shrunk = smlg_tools::build_graph(minimized);
      char* graph_text = nullptr;
      char* pattern_text = nullptr;
      if (shrunk &&
          smlg_graph_serialize(shrunk.get(), &graph_text) == SMLG_OK &&
          smlg_pattern_format(minimized.pattern.data(),
                              minimized.pattern.size(),
                              &pattern_text) == SMLG_OK) {
        write_file("minimized_fail.ldag", graph_text);
        write_file("minimized_fail.pat", std::string(pattern_text) + "\n");
        std::cerr << "smlg: minimized reproducer written to "
                  << "minimized_fail.ldag / minimized_fail.pat (check "
                  << check_name(kind) << ", seed " << seed << ", c " << c
                  << ")\n";
      }
      smlg_free(graph_text);
      smlg_free(pattern_text);
    } catch (const std::exception& e) {
      std::cerr << "smlg: minimization failed: " << e.what() << "\n";
    }
  }
  return kExitVerification;
}

// ---------------------------------------------------------------- bench --

struct BenchFlags {
  std::string stage = "edges";
  int repeats = 0;  // 0: per-stage default
  int c = 10;
  std::optional<uint64_t> seed;
  std::string report;
  bool timings = false;
};

/// Complete-bipartite level DAG of `levels` levels with four distinct labels
/// per level: 16 edges between consecutive levels, so edge counts double
/// exactly when (levels - 1) doubles.
GraphPtr bench_graph(size_t levels) {
  std::string segments;
  for (size_t l = 0; l < levels; ++l) {
    if (l) segments += '|';
    segments += "abcd";
  }
  smlg_graph* raw = nullptr;
  if (smlg_graph_from_degenerate(segments.c_str(), &raw) != SMLG_OK)
    return {};
  return GraphPtr(raw);
}

int run_bench(const BenchFlags& flags) {
  uint64_t seed = 0;
  if (!resolve_seed(flags.seed, seed)) return kExitUsage;

  json report;
  report["command"] = "bench";
  report["stage"] = flags.stage;
  report["seed"] = seed;
  report["c"] = flags.c;
  json rows = json::array();

  smlg_options opt;
  smlg_options_init(&opt);
  opt.c = flags.c;

  if (flags.stage == "edges") {
    int repeats = flags.repeats > 0 ? flags.repeats : 3;
    // Edge counts 2^8 .. 2^14; the pattern stays fixed, so gate-stage cost
    // tracks graph size alone.
    const std::string pattern_text = "zzzz";
    int32_t pattern[4] = {'z', 'z', 'z', 'z'};
    std::printf("%8s %8s %8s %12s %8s %12s %10s\n", "edges", "nodes", "levels",
                "gate_ops", "ratio", "grover_ops", "wall_ms");
    std::vector<double> xs, ys;
    unsigned long long previous = 0;
    for (int k = 8; k <= 14; ++k) {
      size_t edges = size_t{1} << k;
      size_t levels = edges / 16 + 1;
      GraphPtr graph = bench_graph(levels);
      if (!graph) return fail_status("bench", SMLG_ERR_INTERNAL);
      smlg_result result{};
      double wall_total = 0.0;
      for (int r = 0; r < repeats; ++r) {
        opt.seed = seed + static_cast<uint64_t>(r);
        auto start = std::chrono::steady_clock::now();
        if (smlg_status s = smlg_match_dag(graph.get(), pattern, 4,
                                           "quantum-sim", &opt, &result);
            s != SMLG_OK)
          return fail_status("bench", s);
        wall_total += elapsed_ms(start);
      }
      double wall = wall_total / repeats;
      size_t nodes = smlg_graph_node_count(graph.get());
      double ratio =
          previous ? double(result.gate_ops) / double(previous) : 0.0;
      std::printf("%8zu %8zu %8zu %12llu %8.3f %12llu %10.3f\n", edges, nodes,
                  levels, result.gate_ops, ratio, result.grover_ops, wall);
      json row;
      row["edges"] = edges;
      row["nodes"] = nodes;
      row["levels"] = levels;
      row["gate_ops"] = result.gate_ops;
      if (previous) row["ratio"] = ratio;
      if (flags.timings) row["wall_ms"] = wall;
      rows.push_back(std::move(row));
      xs.push_back(double(nodes + edges));
      ys.push_back(double(result.gate_ops));
      previous = result.gate_ops;
    }
    // Least-squares fit gate_ops ~ slope * (|V| + |E|) + intercept.
    double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      double err = ys[i] - (slope * xs[i] + intercept);
      double dev = ys[i] - sy / n;
      ss_res += err * err;
      ss_tot += dev * dev;
    }
    double r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    std::printf("fit: gate_ops = %.4f * (V + E) %+.1f   (r^2 = %.6f)\n", slope,
                intercept, r2);
    json fit;
    fit["slope"] = slope;
    fit["intercept"] = intercept;
    fit["r2"] = r2;
    report["rows"] = std::move(rows);
    report["fit"] = std::move(fit);
  } else {
    int repeats = flags.repeats > 0 ? flags.repeats : 10;
    // Fixed graph, doubling pattern length: the gate stage stays put while
    // the amplification stage grows with the square root of the track count.
    constexpr size_t kLevels = 65;  // 1024 edges
    GraphPtr graph = bench_graph(kLevels);
    if (!graph) return fail_status("bench", SMLG_ERR_INTERNAL);
    std::printf("%8s %8s %14s %8s %12s %10s\n", "m", "tracks", "grover_ops",
                "ratio", "gate_ops", "wall_ms");
    double previous = 0;
    for (size_t m = 4; m <= 64; m *= 2) {
      std::vector<int32_t> pattern(m, 'z');
      double grover_total = 0, wall_total = 0;
      smlg_result result{};
      for (int r = 0; r < repeats; ++r) {
        opt.seed = seed + static_cast<uint64_t>(r);
        auto start = std::chrono::steady_clock::now();
        if (smlg_status s =
                smlg_match_dag(graph.get(), pattern.data(), pattern.size(),
                               "quantum-sim", &opt, &result);
            s != SMLG_OK)
          return fail_status("bench", s);
        wall_total += elapsed_ms(start);
        grover_total += double(result.grover_ops);
      }
      double grover_avg = grover_total / repeats;
      double wall = wall_total / repeats;
      double ratio = previous ? grover_avg / previous : 0.0;
      std::printf("%8zu %8llu %14.2f %8.3f %12llu %10.3f\n", m,
                  result.track_count, grover_avg, ratio, result.gate_ops, wall);
      json row;
      row["m"] = m;
      row["tracks"] = result.track_count;
      row["grover_ops_avg"] = grover_avg;
      if (previous) row["ratio"] = ratio;
      row["gate_ops"] = result.gate_ops;
      if (flags.timings) row["wall_ms"] = wall;
      rows.push_back(std::move(row));
      previous = grover_avg;
    }
    report["rows"] = std::move(rows);
  }
  if (flags.report == "json") std::cout << report.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bit-parallel and simulated-quantum string matching on plain "
               "text and level DAGs"};
  app.require_subcommand(1);

  MatchFlags text_flags;
  std::string text_path, text_pattern_path;
  CLI::App* match_text =
      app.add_subcommand("match-text", "match a pattern against plain text");
  match_text->add_option("--text", text_path, "text file")->required();
  match_text->add_option("--pattern", text_pattern_path, "pattern file")
      ->required();
  add_match_flags(*match_text, text_flags,
                  {"naive", "shift-and", "quantum-sim"}, /*is_dag=*/false);

  MatchFlags dag_flags;
  std::string graph_path, dag_pattern_path;
  CLI::App* match_dag =
      app.add_subcommand("match-dag", "match a pattern against a level DAG");
  match_dag->add_option("--graph", graph_path, ".ldag graph file")->required();
  match_dag->add_option("--pattern", dag_pattern_path, "pattern file")
      ->required();
  add_match_flags(*match_dag, dag_flags, {"dp", "shift-and", "quantum-sim"},
                  /*is_dag=*/true);

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate random instances");
  gen->add_option("--out", gen_flags.out_dir, "output directory")->required();
  gen->add_option("--count", gen_flags.count, "number of instances")
      ->capture_default_str();
  gen->add_option("--nodes", gen_flags.nodes, "nodes per graph")
      ->capture_default_str();
  gen->add_option("--levels", gen_flags.levels, "levels per graph")
      ->capture_default_str();
  gen->add_option("--density", gen_flags.density, "extra-edge probability")
      ->capture_default_str();
  gen->add_option("--alphabet", gen_flags.alphabet, "alphabet size")
      ->capture_default_str();
  gen->add_option("--pattern-length", gen_flags.pattern_length,
                  "pattern length")
      ->capture_default_str();
  gen->add_option("--planted", gen_flags.planted,
                  "plant a guaranteed match (yes, no, or mix)")
      ->capture_default_str()
      ->check(CLI::IsMember({"yes", "no", "mix"}));
  gen->add_option("--seed", gen_flags.seed,
                  "base seed (default: $SMLG_SEED or 0)");

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check every engine against the reference matcher");
  verify->add_option("--corpus", verify_flags.corpus, "instance directory")
      ->required();
  verify->add_option("--c", verify_flags.c, "amplification round budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_flags.seed,
                     "base seed (default: $SMLG_SEED or 0)");
  verify->add_option("--report", verify_flags.report, "emit a JSON report")
      ->check(CLI::IsMember({"json"}));
  verify->add_flag("--timings", verify_flags.timings,
                   "include wall time in reports");

  BenchFlags bench_flags;
  CLI::App* bench =
      app.add_subcommand("bench", "gate-count scaling over doubling sizes");
  bench->add_option("--stage", bench_flags.stage,
                    "edges: double the graph; pattern: double the pattern")
      ->capture_default_str()
      ->check(CLI::IsMember({"edges", "pattern"}));
  bench->add_option("--repeats", bench_flags.repeats,
                    "runs per size (default 3 for edges, 10 for pattern)");
  bench->add_option("--c", bench_flags.c, "amplification round budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_flags.seed,
                    "base seed (default: $SMLG_SEED or 0)");
  bench->add_option("--report", bench_flags.report, "emit a JSON report")
      ->check(CLI::IsMember({"json"}));
  bench->add_flag("--timings", bench_flags.timings,
                  "include wall time in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (match_text->parsed())
      return run_match_text(text_path, text_pattern_path, text_flags);
    if (match_dag->parsed())
      return run_match_dag(graph_path, dag_pattern_path, dag_flags);
    if (gen->parsed()) return run_gen(gen_flags);
    if (verify->parsed()) return run_verify(verify_flags);
    if (bench->parsed()) return run_bench(bench_flags);
  } catch (const std::exception& e) {
    std::cerr << "smlg: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
