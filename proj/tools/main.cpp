// Command-line front end: exact triadic statistics, wedge-sampling
// estimators, uniform triangle sampling, Doulion baseline, benchmark runner
// and the sample-size calculator.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "triad/bench.hpp"
#include "triad/doulion.hpp"
#include "triad/exact.hpp"
#include "triad/graph.hpp"
#include "triad/sampling.hpp"

namespace {

using nlohmann::json;
using namespace triad;

constexpr const char* kSchema = "triad/1";
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;
constexpr int kExitDomain = 5;
constexpr int kExitClosure = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Options {
  std::string input;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double delta = kDefaultDelta;
  Count samples = 32000;
  bool samples_given = false;
  double epsilon = 0.0;
  bool epsilon_given = false;
  int threads = 0;
};

std::uint64_t choose_seed(const Options& opts) {
  if (opts.seed_given) return opts.seed;
  if (const char* env = std::getenv("TRIAD_SEED"))
    return std::strtoull(env, nullptr, 10);
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Exactly one of {k, epsilon} drives the plan; the other is derived.
SamplePlan resolve_plan(const Options& opts) {
  if (opts.epsilon_given) return plan_from_error(opts.epsilon, opts.delta);
  return plan_from_samples(opts.samples, opts.delta);
}

void apply_threads(const Options& opts) {
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, json>>& out) {
  if (j.is_object()) {
    for (auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else {
    out.emplace_back(prefix, j);
  }
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();  // shortest round-trip for numbers
}

// CSV mirrors the "result" object: one row, or one row per bin when the
// result is binned.
std::string to_csv(const json& result) {
  std::ostringstream out;
  const bool binned = result.contains("bins");
  std::vector<json> rows;
  if (binned)
    for (const json& bin : result["bins"]) rows.push_back(bin);
  else
    rows.push_back(result);

  std::vector<std::pair<std::string, json>> cells;
  flatten(rows[0], "", cells);
  for (std::size_t i = 0; i < cells.size(); ++i)
    out << (i ? "," : "") << cells[i].first;
  out << '\n';
  for (const json& row : rows) {
    cells.clear();
    flatten(row, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i)
      out << (i ? "," : "") << csv_cell(cells[i].second);
    out << '\n';
  }
  return out.str();
}

std::string to_text(const json& doc) {
  std::ostringstream out;
  out << doc["command"].get<std::string>();
  if (doc.contains("input")) out << ' ' << doc["input"].get<std::string>();
  out << '\n';
  std::vector<std::pair<std::string, json>> cells;
  flatten(doc["result"], "", cells);
  for (auto& [key, value] : cells) out << "  " << key << " = " << value.dump() << '\n';
  return out.str();
}

void emit(const json& doc, const Options& opts) {
  std::string rendered;
  if (opts.format == "json") rendered = doc.dump(2) + "\n";
  else if (opts.format == "csv") rendered = to_csv(doc["result"]);
  else rendered = to_text(doc);

  if (opts.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(opts.output);
    if (!out) throw IoError("cannot open '" + opts.output + "' for writing");
    out << rendered;
  }
}

json estimate_json(const Estimate& e) {
  return json{{"value", e.value},
              {"k", e.k},
              {"closed", e.closed_count},
              {"seed", e.seed},
              {"epsilon", e.epsilon},
              {"delta", e.delta},
              {"bound", e.epsilon * e.bound_scale}};
}

json doc_header(const std::string& command, const Options& opts) {
  json doc{{"schema", kSchema}, {"command", command}};
  if (!opts.input.empty()) doc["input"] = opts.input;
  return doc;
}

Graph timed_load(const Options& opts, json& doc) {
  const auto start = Clock::now();
  Graph g = load_graph_file(opts.input);
  doc["timing"]["load_seconds"] = seconds_since(start);
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  return g;
}

void dump_triangles(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for_each_triangle_serial_ref(g, [&](const Triangle& t) {
    out << g.original_label(t.a) << ' ' << g.original_label(t.b) << ' '
        << g.original_label(t.c) << '\n';
  });
}

int run_stats(const Options& opts, bool per_degree, const std::string& dump_path) {
  apply_threads(opts);
  json doc = doc_header("stats", opts);
  Graph g = timed_load(opts, doc);
  const auto start = Clock::now();
  const ExactTriadStats stats = exact_stats(g);
  doc["timing"]["run_seconds"] = seconds_since(start);

  json result{{"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"wedges", stats.wedges},
              {"triangles", stats.triangles},
              {"global_cc", stats.global_cc},
              {"local_cc", stats.local_cc}};
  if (per_degree) {
    json rows = json::array();
    for (Count d = 0; d < stats.per_degree.size(); ++d) {
      const auto& row = stats.per_degree[d];
      if (row.n_d == 0) continue;
      rows.push_back(json{{"degree", d},
                          {"vertices", row.n_d},
                          {"wedges", row.wedges},
                          {"triangles", row.triangles},
                          {"mean_cc", row.mean_cc}});
    }
    result["per_degree"] = rows;
  }
  if (!dump_path.empty()) {
    dump_triangles(g, dump_path);
    result["triangle_dump"] = dump_path;
  }
  doc["result"] = result;
  emit(doc, opts);
  return 0;
}

int run_gcc(const Options& opts) {
  apply_threads(opts);
  json doc = doc_header("gcc", opts);
  Graph g = timed_load(opts, doc);
  const SamplePlan plan = resolve_plan(opts);
  const std::uint64_t seed = choose_seed(opts);

  auto start = Clock::now();
  const WedgeDistribution dist(g);
  doc["timing"]["build_seconds"] = seconds_since(start);

  start = Clock::now();
  const Estimate cc = estimate_global_cc(g, dist, plan.k, seed, opts.delta);
  const Estimate tri = estimate_triangle_count(g, dist, plan.k, seed, opts.delta);
  doc["timing"]["run_seconds"] = seconds_since(start);

  json result = estimate_json(cc);
  result["wedges"] = dist.total_wedges();
  result["triangle_estimate"] = tri.value;
  result["triangle_bound"] = tri.epsilon * tri.bound_scale;
  doc["result"] = result;
  emit(doc, opts);
  return 0;
}

int run_lcc(const Options& opts, bool require_degree_two) {
  apply_threads(opts);
  json doc = doc_header("lcc", opts);
  Graph g = timed_load(opts, doc);
  const SamplePlan plan = resolve_plan(opts);
  const std::uint64_t seed = choose_seed(opts);

  const auto start = Clock::now();
  const Estimate e = estimate_local_cc(
      g, plan.k, seed, opts.delta,
      require_degree_two ? LocalCcMode::RequireDegreeTwo
                         : LocalCcMode::IncludeAllVertices);
  doc["timing"]["run_seconds"] = seconds_since(start);

  json result = estimate_json(e);
  result["vertex_universe"] = require_degree_two ? "degree>=2" : "all";
  doc["result"] = result;
  emit(doc, opts);
  return 0;
}

int run_ccd(const Options& opts, std::optional<Count> degree,
            const std::string& bins_scheme, const std::string& budget_mode) {
  apply_threads(opts);
  json doc = doc_header("ccd", opts);
  Graph g = timed_load(opts, doc);
  const SamplePlan plan = resolve_plan(opts);
  const std::uint64_t seed = choose_seed(opts);

  auto start = Clock::now();
  const DegreeIndex index(g);
  doc["timing"]["build_seconds"] = seconds_since(start);

  start = Clock::now();
  json result;
  if (degree) {
    const Estimate e =
        estimate_degree_cc(g, index, *degree, plan.k, seed, opts.delta);
    result = estimate_json(e);
    result["degree"] = *degree;
    result["vertices"] = index.count(*degree);
    result["wedges"] = index.wedges(*degree);
  } else {
    if (bins_scheme != "log2")
      throw DomainError("unknown bin scheme '" + bins_scheme + "'");
    const auto bins = log2_degree_bins(index);
    const BinBudget budget = budget_mode == "total"
                                 ? BinBudget::TotalSplitByWedges
                                 : BinBudget::PerBin;
    const auto estimates =
        estimate_binned_cc(g, index, bins, plan.k, seed, opts.delta, budget);
    json rows = json::array();
    for (const BinnedEstimate& row : estimates) {
      json cell{{"degree_lo", row.bin.lo},
                {"degree_hi", row.bin.hi},
                {"vertices", row.vertex_count},
                {"wedges", row.wedge_count},
                {"skipped", row.skipped}};
      if (!row.skipped) cell["estimate"] = estimate_json(row.estimate);
      rows.push_back(cell);
    }
    result["bins"] = rows;
    result["bin_scheme"] = "log2";
    result["budget"] = budget_mode;
    result["seed"] = seed;
  }
  doc["timing"]["run_seconds"] = seconds_since(start);
  doc["result"] = result;
  emit(doc, opts);
  return 0;
}

int run_td(const Options& opts, Count degree) {
  apply_threads(opts);
  json doc = doc_header("td", opts);
  Graph g = timed_load(opts, doc);
  const SamplePlan plan = resolve_plan(opts);
  const std::uint64_t seed = choose_seed(opts);

  auto start = Clock::now();
  const DegreeIndex index(g);
  doc["timing"]["build_seconds"] = seconds_since(start);

  start = Clock::now();
  const Estimate e =
      estimate_degree_triangles(g, index, degree, plan.k, seed, opts.delta);
  doc["timing"]["run_seconds"] = seconds_since(start);

  json result = estimate_json(e);
  result["degree"] = degree;
  result["wedges"] = index.wedges(degree);
  doc["result"] = result;
  emit(doc, opts);
  return 0;
}

int run_tri_sample(const Options& opts, Count count, Count max_wedges,
                   std::optional<double> ratio, const std::string& dump_path) {
  apply_threads(opts);
  json doc = doc_header("tri-sample", opts);
  Graph g = timed_load(opts, doc);
  const std::uint64_t seed = choose_seed(opts);

  auto start = Clock::now();
  const WedgeDistribution dist(g);
  doc["timing"]["build_seconds"] = seconds_since(start);

  start = Clock::now();
  const TriangleSample sample =
      sample_uniform_triangles(g, dist, count, max_wedges, seed);
  doc["timing"]["run_seconds"] = seconds_since(start);

  json result{{"requested", count},
              {"collected", sample.triangles.size()},
              {"wedges_drawn", sample.wedges_drawn},
              {"seed", seed},
              {"mean_draws_per_triangle",
               static_cast<double>(sample.wedges_drawn) /
                   static_cast<double>(sample.triangles.size())}};
  if (ratio) {
    result["ratio_threshold"] = *ratio;
    result["ratio_fraction"] =
        triangle_sample_ratio_fraction(sample.triangles, *ratio);
  }
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw IoError("cannot open '" + dump_path + "' for writing");
    for (const Triangle& t : sample.triangles)
      out << g.original_label(t.a) << ' ' << g.original_label(t.b) << ' '
          << g.original_label(t.c) << '\n';
    result["triangle_dump"] = dump_path;
  }
  doc["result"] = result;
  emit(doc, opts);
  return 0;
}

int run_doulion(const Options& opts, double p, const std::string& metric,
                bool clamp) {
  apply_threads(opts);
  json doc = doc_header("doulion", opts);
  Graph g = timed_load(opts, doc);
  const std::uint64_t seed = choose_seed(opts);

  const auto start = Clock::now();
  DoulionEstimate e;
  if (metric == "tri") {
    e = doulion_triangle_estimate(g, p, seed);
  } else if (metric == "gcc") {
    e = doulion_global_cc(g, p, seed);
  } else if (metric == "lcc") {
    e = doulion_local_cc(g, p, seed,
                         clamp ? 1.0 : std::numeric_limits<double>::infinity());
  } else {
    throw DomainError("unknown metric '" + metric + "'");
  }
  doc["timing"]["run_seconds"] = seconds_since(start);

  doc["result"] = json{{"metric", metric},
                       {"value", e.value},
                       {"p", e.p},
                       {"sparsified_triangles", e.sparsified_triangles},
                       {"kept_edges", e.kept_edges},
                       {"seed", e.seed}};
  emit(doc, opts);
  return 0;
}

int run_bench(const Options& opts, const std::string& estimator, Count trials,
              double p, Count degree, bool with_enumeration,
              const std::string& csv_path, const std::string& json_path) {
  apply_threads(opts);
  json doc = doc_header("bench", opts);
  Graph g = timed_load(opts, doc);
  const std::uint64_t seed = choose_seed(opts);
  const SamplePlan plan = resolve_plan(opts);

  EstimatorSpec spec = parse_estimator_spec(estimator);
  spec.samples = plan.k;
  spec.delta = opts.delta;
  spec.p = p;
  spec.degree = degree;

  const TrialReport report = with_enumeration
                                 ? speedup_report(g, spec, trials, seed)
                                 : run_trials(g, spec, trials, seed);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot open '" + csv_path + "' for writing");
    write_reports_csv(out, {&report, 1});
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw IoError("cannot open '" + json_path + "' for writing");
    write_reports_json(out, {&report, 1});
  }

  json result{{"estimator", report.estimator},
              {"trials", report.trials},
              {"master_seed", report.master_seed},
              {"min", report.min_value},
              {"max", report.max_value},
              {"mean", report.mean_value},
              {"sd", report.sd_value},
              {"valid", report.valid}};
  if (report.oracle_value) result["oracle"] = *report.oracle_value;
  if (!report.valid) result["error"] = report.error;
  doc["timing"]["build_seconds"] = report.build_seconds;
  doc["timing"]["mean_trial_seconds"] = report.mean_trial_seconds;
  if (report.enumeration_seconds)
    doc["timing"]["enumeration_seconds"] = *report.enumeration_seconds;
  if (report.speedup) doc["timing"]["speedup"] = *report.speedup;
  if (report.speedup_excl_build)
    doc["timing"]["speedup_excl_build"] = *report.speedup_excl_build;
  doc["result"] = result;
  emit(doc, opts);
  return 0;
}

int run_sample_size(const Options& opts) {
  json doc = doc_header("sample-size", opts);
  SamplePlan plan;
  if (opts.epsilon_given && opts.samples_given)
    throw DomainError("give either --epsilon or --samples, not both");
  if (opts.epsilon_given) plan = plan_from_error(opts.epsilon, opts.delta);
  else if (opts.samples_given) plan = plan_from_samples(opts.samples, opts.delta);
  else throw DomainError("one of --epsilon or --samples is required");

  doc["result"] = json{{"samples", plan.k},
                       {"epsilon", plan.epsilon},
                       {"error_bound", error_bound(plan.k, plan.delta)},
                       {"delta", plan.delta}};
  emit(doc, opts);
  return 0;
}

int run_cache(const Options& opts, const std::string& out_path) {
  json doc = doc_header("cache", opts);
  Graph g = timed_load(opts, doc);
  write_binary_cache_file(g, out_path);
  doc["result"] = json{{"output", out_path},
                       {"n", g.num_vertices()},
                       {"m", g.num_edges()}};
  emit(doc, opts);
  return 0;
}

int emit_error(int code, const std::string& kind, const std::string& message) {
  json err{{"schema", "triad-error/1"},
           {"error", json{{"code", code}, {"kind", kind}, {"message", message}}}};
  std::cout << err.dump(2) << std::endl;
  return code;
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("input", opts.input, "edge list or binary graph cache")
      ->required();
  cmd->add_option("--seed", opts.seed, "RNG seed (default: TRIAD_SEED or random)")
      ->each([&opts](const std::string&) { opts.seed_given = true; });
  cmd->add_option("--format", opts.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "write the report to a file");
  cmd->add_option("--threads", opts.threads, "worker threads (0 = auto)")
      ->capture_default_str();
}

void add_plan(CLI::App* cmd, Options& opts) {
  auto* k = cmd->add_option("--samples", opts.samples, "wedge samples k")
                ->each([&opts](const std::string&) { opts.samples_given = true; });
  auto* eps = cmd->add_option("--epsilon", opts.epsilon,
                              "derive k from this additive error bound")
                  ->each([&opts](const std::string&) { opts.epsilon_given = true; });
  k->excludes(eps);
  eps->excludes(k);
  cmd->add_option("--delta", opts.delta, "failure probability")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triadic graph measures via exact enumeration and wedge sampling"};
  app.require_subcommand(1);

  Options opts;

  bool per_degree = false;
  std::string stats_dump;
  auto* stats_cmd = app.add_subcommand("stats", "exact triadic statistics");
  add_common(stats_cmd, opts);
  stats_cmd->add_flag("--per-degree", per_degree, "include per-degree rows");
  stats_cmd->add_option("--dump-triangles", stats_dump,
                        "write all triangles, one 'a b c' line each");

  auto* gcc_cmd =
      app.add_subcommand("gcc", "estimate the global clustering coefficient");
  add_common(gcc_cmd, opts);
  add_plan(gcc_cmd, opts);

  bool lcc_min2 = false;
  auto* lcc_cmd =
      app.add_subcommand("lcc", "estimate the local clustering coefficient");
  add_common(lcc_cmd, opts);
  add_plan(lcc_cmd, opts);
  lcc_cmd->add_flag(
      "--min-degree-2", lcc_min2,
      "restrict the vertex universe to degree >= 2 (the default averages over "
      "all vertices, scoring degree < 2 as 0)");

  Count ccd_degree = 0;
  std::string bins_scheme = "log2";
  std::string budget_mode = "per-bin";
  auto* ccd_cmd =
      app.add_subcommand("ccd", "degree-wise clustering coefficients");
  add_common(ccd_cmd, opts);
  add_plan(ccd_cmd, opts);
  auto* degree_opt =
      ccd_cmd->add_option("--degree", ccd_degree, "estimate a single degree");
  ccd_cmd->add_option("--bins", bins_scheme, "binning scheme (log2)")
      ->capture_default_str()
      ->excludes(degree_opt);
  ccd_cmd->add_option("--budget", budget_mode,
                      "per-bin: k samples per bin; total: split k by wedge mass")
      ->check(CLI::IsMember({"per-bin", "total"}))
      ->capture_default_str();

  Count td_degree = 0;
  auto* td_cmd = app.add_subcommand(
      "td", "estimate triangles incident to degree-d vertices");
  add_common(td_cmd, opts);
  add_plan(td_cmd, opts);
  td_cmd->add_option("--degree", td_degree, "target degree")->required();

  Count tri_count = 0;
  Count max_wedges = 10'000'000;
  double ratio_threshold = 0.0;
  std::string tri_dump;
  auto* tri_cmd = app.add_subcommand("tri-sample", "uniform triangle sample");
  add_common(tri_cmd, opts);
  tri_cmd->add_option("--count", tri_count, "triangles to sample")->required();
  tri_cmd->add_option("--max-wedges", max_wedges, "wedge draw budget")
      ->capture_default_str();
  auto* ratio_opt = tri_cmd->add_option(
      "--ratio", ratio_threshold, "also report the max/min degree ratio fraction");
  tri_cmd->add_option("--dump", tri_dump, "write sampled triangles to a file");

  double doulion_p = 0.1;
  std::string doulion_metric = "tri";
  bool doulion_clamp = false;
  auto* doulion_cmd =
      app.add_subcommand("doulion", "sparsify-and-rescale baseline");
  add_common(doulion_cmd, opts);
  doulion_cmd->add_option("--p", doulion_p, "edge retention probability")
      ->required();
  doulion_cmd->add_option("--metric", doulion_metric, "tri|gcc|lcc")
      ->check(CLI::IsMember({"tri", "gcc", "lcc"}))
      ->capture_default_str();
  doulion_cmd->add_flag("--clamp", doulion_clamp,
                        "clamp per-vertex coefficients at 1 (lcc only)");

  std::string bench_estimator = "gcc";
  Count bench_trials = 100;
  double bench_p = 0.1;
  Count bench_degree = 0;
  bool no_enumeration = false;
  std::string bench_csv, bench_json;
  auto* bench_cmd =
      app.add_subcommand("bench", "multi-trial runs with timing and spread");
  add_common(bench_cmd, opts);
  add_plan(bench_cmd, opts);
  bench_cmd
      ->add_option("--estimator", bench_estimator,
                   "gcc|tri|lcc|ccd|td|doulion-gcc|doulion-lcc|doulion-tri|enum")
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench_trials, "independent runs")
      ->capture_default_str();
  bench_cmd->add_option("--p", bench_p, "Doulion retention probability")
      ->capture_default_str();
  bench_cmd->add_option("--degree", bench_degree, "degree for ccd/td");
  bench_cmd->add_flag("--no-enumeration", no_enumeration,
                      "skip the enumeration baseline timing");
  bench_cmd->add_option("--csv", bench_csv, "also write the report as CSV");
  bench_cmd->add_option("--json", bench_json, "also write the report as JSON");

  auto* size_cmd = app.add_subcommand(
      "sample-size", "Hoeffding sample-size / error-bound calculator");
  add_plan(size_cmd, opts);
  size_cmd->add_option("--format", opts.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  size_cmd->add_option("--output", opts.output, "write the report to a file");

  std::string cache_out;
  auto* cache_cmd =
      app.add_subcommand("cache", "convert an edge list to the binary cache");
  add_common(cache_cmd, opts);
  cache_cmd->add_option("cache-file", cache_out, "cache file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return emit_error(kExitUsage, "usage", e.what());
  }

  try {
    if (*stats_cmd) return run_stats(opts, per_degree, stats_dump);
    if (*gcc_cmd) return run_gcc(opts);
    if (*lcc_cmd) return run_lcc(opts, lcc_min2);
    if (*ccd_cmd)
      return run_ccd(opts,
                     degree_opt->count() ? std::optional<Count>(ccd_degree)
                                         : std::nullopt,
                     bins_scheme, budget_mode);
    if (*td_cmd) return run_td(opts, td_degree);
    if (*tri_cmd)
      return run_tri_sample(opts, tri_count, max_wedges,
                            ratio_opt->count()
                                ? std::optional<double>(ratio_threshold)
                                : std::nullopt,
                            tri_dump);
    if (*doulion_cmd)
      return run_doulion(opts, doulion_p, doulion_metric, doulion_clamp);
    if (*bench_cmd)
      return run_bench(opts, bench_estimator, bench_trials, bench_p,
                       bench_degree, !no_enumeration, bench_csv, bench_json);
    if (*size_cmd) return run_sample_size(opts);
    if (*cache_cmd) return run_cache(opts, cache_out);
  } catch (const ParseError& e) {
    return emit_error(kExitParse, "parse", e.what());
  } catch (const InsufficientClosureError& e) {
    return emit_error(kExitClosure, "insufficient-closure", e.what());
  } catch (const IoError& e) {
    return emit_error(kExitIo, "io", e.what());
  } catch (const DomainError& e) {
    return emit_error(kExitDomain, "domain", e.what());
  } catch (const Error& e) {
    return emit_error(kExitDomain, "error", e.what());
  }
  return 0;
}
