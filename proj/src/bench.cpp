#include "triad/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "triad/doulion.hpp"

namespace triad {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Prebuilt per-estimator state shared by all trials.
struct Workbench {
  std::optional<WedgeDistribution> dist;
  std::optional<DegreeIndex> index;
};

bool needs_distribution(EstimatorKind kind) {
  return kind == EstimatorKind::GlobalCc || kind == EstimatorKind::TriangleCount;
}

bool needs_index(EstimatorKind kind) {
  return kind == EstimatorKind::DegreeCc || kind == EstimatorKind::DegreeTriangles;
}

double run_one(const Graph& g, const EstimatorSpec& spec, const Workbench& bench,
               std::uint64_t trial_seed) {
  switch (spec.kind) {
    case EstimatorKind::GlobalCc:
      return estimate_global_cc(g, *bench.dist, spec.samples, trial_seed,
                                spec.delta)
          .value;
    case EstimatorKind::TriangleCount:
      return estimate_triangle_count(g, *bench.dist, spec.samples, trial_seed,
                                     spec.delta)
          .value;
    case EstimatorKind::LocalCc:
      return estimate_local_cc(g, spec.samples, trial_seed, spec.delta).value;
    case EstimatorKind::DegreeCc:
      return estimate_degree_cc(g, *bench.index, spec.degree, spec.samples,
                                trial_seed, spec.delta)
          .value;
    case EstimatorKind::DegreeTriangles:
      return estimate_degree_triangles(g, *bench.index, spec.degree,
                                       spec.samples, trial_seed, spec.delta)
          .value;
    case EstimatorKind::DoulionTriangles:
      return doulion_triangle_estimate(g, spec.p, trial_seed).value;
    case EstimatorKind::DoulionGlobalCc:
      return doulion_global_cc(g, spec.p, trial_seed).value;
    case EstimatorKind::DoulionLocalCc:
      return doulion_local_cc(g, spec.p, trial_seed).value;
    case EstimatorKind::Enumeration:
      return static_cast<double>(exact_stats(g).triangles);
  }
  throw DomainError("unknown estimator kind");
}

std::optional<double> oracle_value_for(const EstimatorSpec& spec,
                                       const ExactTriadStats* oracle) {
  if (oracle == nullptr) return std::nullopt;
  switch (spec.kind) {
    case EstimatorKind::GlobalCc:
    case EstimatorKind::DoulionGlobalCc:
      return oracle->global_cc;
    case EstimatorKind::TriangleCount:
    case EstimatorKind::DoulionTriangles:
    case EstimatorKind::Enumeration:
      return static_cast<double>(oracle->triangles);
    case EstimatorKind::LocalCc:
    case EstimatorKind::DoulionLocalCc:
      return oracle->local_cc;
    case EstimatorKind::DegreeCc:
      if (spec.degree < oracle->per_degree.size())
        return oracle->per_degree[spec.degree].mean_cc;
      return std::nullopt;
    case EstimatorKind::DegreeTriangles:
      if (spec.degree < oracle->per_degree.size())
        return static_cast<double>(oracle->per_degree[spec.degree].triangles);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::string EstimatorSpec::name() const {
  std::ostringstream out;
  switch (kind) {
    case EstimatorKind::GlobalCc: out << "gcc(k=" << samples << ")"; break;
    case EstimatorKind::TriangleCount: out << "tri(k=" << samples << ")"; break;
    case EstimatorKind::LocalCc: out << "lcc(k=" << samples << ")"; break;
    case EstimatorKind::DegreeCc:
      out << "ccd(d=" << degree << ",k=" << samples << ")";
      break;
    case EstimatorKind::DegreeTriangles:
      out << "td(d=" << degree << ",k=" << samples << ")";
      break;
    case EstimatorKind::DoulionTriangles: out << "doulion-tri(p=" << p << ")"; break;
    case EstimatorKind::DoulionGlobalCc: out << "doulion-gcc(p=" << p << ")"; break;
    case EstimatorKind::DoulionLocalCc: out << "doulion-lcc(p=" << p << ")"; break;
    case EstimatorKind::Enumeration: out << "enum"; break;
  }
  return out.str();
}

EstimatorSpec parse_estimator_spec(const std::string& name) {
  EstimatorSpec spec;
  if (name == "gcc") spec.kind = EstimatorKind::GlobalCc;
  else if (name == "tri") spec.kind = EstimatorKind::TriangleCount;
  else if (name == "lcc") spec.kind = EstimatorKind::LocalCc;
  else if (name == "ccd") spec.kind = EstimatorKind::DegreeCc;
  else if (name == "td") spec.kind = EstimatorKind::DegreeTriangles;
  else if (name == "doulion-tri") spec.kind = EstimatorKind::DoulionTriangles;
  else if (name == "doulion-gcc") spec.kind = EstimatorKind::DoulionGlobalCc;
  else if (name == "doulion-lcc") spec.kind = EstimatorKind::DoulionLocalCc;
  else if (name == "enum") spec.kind = EstimatorKind::Enumeration;
  else throw DomainError("unknown estimator '" + name + "'");
  return spec;
}

TrialReport run_trials(const Graph& g, const EstimatorSpec& spec, Count trials,
                       std::uint64_t master_seed,
                       const ExactTriadStats* oracle) {
  if (trials < 1) throw DomainError("trial count must be >= 1");
  TrialReport report;
  report.estimator = spec.name();
  report.master_seed = master_seed;
  report.oracle_value = oracle_value_for(spec, oracle);

  Workbench bench;
  const auto build_start = Clock::now();
  try {
    if (needs_distribution(spec.kind)) bench.dist.emplace(g);
    if (needs_index(spec.kind)) bench.index.emplace(g);
  } catch (const Error& err) {
    report.valid = false;
    report.error = err.what();
    return report;
  }
  report.build_seconds = seconds_since(build_start);

  // Warm-up run, discarded.
  try {
    run_one(g, spec, bench, mix64(master_seed, 0));
  } catch (const Error& err) {
    report.valid = false;
    report.error = err.what();
    return report;
  }

  std::vector<double> values;
  values.reserve(trials);
  for (Count i = 0; i < trials; ++i) {
    const auto start = Clock::now();
    try {
      values.push_back(run_one(g, spec, bench, mix64(master_seed, i)));
    } catch (const Error& err) {
      report.valid = false;
      report.error = err.what();
      break;
    }
    report.trial_seconds.push_back(seconds_since(start));
  }

  report.trials = values.size();
  if (!values.empty()) {
    report.min_value = *std::min_element(values.begin(), values.end());
    report.max_value = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    report.mean_value = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - report.mean_value) * (v - report.mean_value);
    report.sd_value =
        values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1))
                          : 0.0;
    double time_sum = 0.0;
    for (double t : report.trial_seconds) time_sum += t;
    report.mean_trial_seconds = time_sum / static_cast<double>(values.size());
  }
  report.values = std::move(values);
  return report;
}

TrialReport speedup_report(const Graph& g, const EstimatorSpec& spec,
                           Count trials, std::uint64_t master_seed,
                           const ExactTriadStats* oracle) {
  TrialReport report = run_trials(g, spec, trials, master_seed, oracle);

  exact_stats_serial(g);  // warm-up
  const auto start = Clock::now();
  const ExactTriadStats baseline = exact_stats_serial(g);
  report.enumeration_seconds = seconds_since(start);
  if (!report.oracle_value) report.oracle_value = oracle_value_for(spec, &baseline);

  if (report.valid && report.mean_trial_seconds > 0) {
    report.speedup = *report.enumeration_seconds /
                     (report.build_seconds + report.mean_trial_seconds);
    report.speedup_excl_build =
        *report.enumeration_seconds / report.mean_trial_seconds;
  }
  return report;
}

namespace {

nlohmann::json report_to_json(const TrialReport& r) {
  nlohmann::json j{
      {"estimator", r.estimator},
      {"trials", r.trials},
      {"master_seed", r.master_seed},
      {"min", r.min_value},
      {"max", r.max_value},
      {"mean", r.mean_value},
      {"sd", r.sd_value},
      {"valid", r.valid},
  };
  j["oracle"] = r.oracle_value ? nlohmann::json(*r.oracle_value) : nlohmann::json();
  j["timing"] = {
      {"build_seconds", r.build_seconds},
      {"mean_trial_seconds", r.mean_trial_seconds},
      {"trial_seconds", r.trial_seconds},
  };
  if (r.enumeration_seconds)
    j["timing"]["enumeration_seconds"] = *r.enumeration_seconds;
  if (r.speedup) j["timing"]["speedup"] = *r.speedup;
  if (r.speedup_excl_build)
    j["timing"]["speedup_excl_build"] = *r.speedup_excl_build;
  if (!r.valid) j["error"] = r.error;
  return j;
}

}  // namespace

void write_reports_csv(std::ostream& out, std::span<const TrialReport> reports) {
  out << "estimator,trials,master_seed,oracle,min,max,mean,sd,"
         "build_seconds,mean_trial_seconds,enumeration_seconds,speedup,"
         "speedup_excl_build,valid\n";
  for (const TrialReport& r : reports) {
    out << r.estimator << ',' << r.trials << ',' << r.master_seed << ',';
    if (r.oracle_value) out << *r.oracle_value;
    out << ',' << r.min_value << ',' << r.max_value << ',' << r.mean_value
        << ',' << r.sd_value << ',' << r.build_seconds << ','
        << r.mean_trial_seconds << ',';
    if (r.enumeration_seconds) out << *r.enumeration_seconds;
    out << ',';
    if (r.speedup) out << *r.speedup;
    out << ',';
    if (r.speedup_excl_build) out << *r.speedup_excl_build;
    out << ',' << (r.valid ? 1 : 0) << '\n';
  }
}

void write_reports_json(std::ostream& out, std::span<const TrialReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TrialReport& r : reports) arr.push_back(report_to_json(r));
  out << arr.dump(2) << '\n';
}

}  // namespace triad
