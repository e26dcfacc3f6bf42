#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triad/exact.hpp"
#include "triad/graph.hpp"
#include "triad/sampling.hpp"

namespace triad {

enum class EstimatorKind {
  GlobalCc,
  TriangleCount,
  LocalCc,
  DegreeCc,
  DegreeTriangles,
  DoulionTriangles,
  DoulionGlobalCc,
  DoulionLocalCc,
  Enumeration,  // parallel exact stats; the estimate is T itself
};

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::GlobalCc;
  Count samples = 32000;
  double delta = kDefaultDelta;
  Count degree = 0;   // DegreeCc / DegreeTriangles
  double p = 0.1;     // Doulion variants
  std::string name() const;
};

EstimatorSpec parse_estimator_spec(const std::string& name);

// Multi-trial experiment result. Values are reproducible for a fixed master
// seed (trial i uses substream i); times are not.
struct TrialReport {
  std::string estimator;
  Count trials = 0;
  std::uint64_t master_seed = 0;
  double min_value = 0;
  double max_value = 0;
  double mean_value = 0;
  double sd_value = 0;  // two-pass sample standard deviation
  std::optional<double> oracle_value;
  std::vector<double> values;  // per-trial estimates, in trial order
  std::vector<double> trial_seconds;
  double mean_trial_seconds = 0;
  double build_seconds = 0;  // distribution / index construction, once
  std::optional<double> enumeration_seconds;  // serial exact-stats baseline
  std::optional<double> speedup;            // enumeration / (build + mean trial)
  std::optional<double> speedup_excl_build; // enumeration / mean trial
  bool valid = true;
  std::string error;
};

// Runs `trials` independent estimates; deterministic in value for a fixed
// master seed. A failing trial aborts with a partial report flagged invalid.
TrialReport run_trials(const Graph& g, const EstimatorSpec& spec, Count trials,
                       std::uint64_t master_seed,
                       const ExactTriadStats* oracle = nullptr);

// run_trials plus a serial-enumeration wall-clock baseline (one warm-up run
// discarded) and the derived speedups. Timing excludes graph load and counts
// the distribution build separately from per-trial sampling.
TrialReport speedup_report(const Graph& g, const EstimatorSpec& spec,
                           Count trials, std::uint64_t master_seed,
                           const ExactTriadStats* oracle = nullptr);

// Fixed column order; see README.
void write_reports_csv(std::ostream& out, std::span<const TrialReport> reports);
void write_reports_json(std::ostream& out, std::span<const TrialReport> reports);

}  // namespace triad
