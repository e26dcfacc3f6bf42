#include "triad/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace triad {

Count sample_size(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DomainError("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw DomainError("delta must lie in (0, 1)");
  const double k = std::ceil(0.5 * std::log(2.0 / delta) / (epsilon * epsilon));
  return static_cast<Count>(k);
}

double error_bound(Count k, double delta) {
  if (k < 1) throw DomainError("sample count must be >= 1");
  if (!(delta > 0.0 && delta < 1.0))
    throw DomainError("delta must lie in (0, 1)");
  return std::sqrt(0.5 * std::log(2.0 / delta) / static_cast<double>(k));
}

SamplePlan plan_from_error(double epsilon, double delta) {
  SamplePlan plan;
  plan.k = sample_size(epsilon, delta);
  plan.epsilon = epsilon;
  plan.delta = delta;
  return plan;
}

SamplePlan plan_from_samples(Count k, double delta) {
  SamplePlan plan;
  plan.k = k;
  plan.epsilon = error_bound(k, delta);
  plan.delta = delta;
  return plan;
}

WedgeDistribution::WedgeDistribution(const Graph& g) {
  cumulative_.resize(g.num_vertices());
  Count running = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    running += g.wedge_count(v);
    cumulative_[v] = running;
  }
  total_ = running;
  if (total_ == 0) throw DomainError("graph has no wedges");
}

VertexId WedgeDistribution::sample_center(Rng& rng) const {
  const Count x = rng.below(total_);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  return static_cast<VertexId>(it - cumulative_.begin());
}

Wedge sample_uniform_wedge(const Graph& g, const WedgeDistribution& dist,
                           Rng& rng) {
  const VertexId center = dist.sample_center(rng);
  auto [a, b] = g.random_neighbor_pair(center, rng);
  return {center, a, b};
}

namespace {

Estimate make_coefficient_estimate(Count closed, Count k, std::uint64_t seed,
                                   double delta) {
  Estimate e;
  e.value = static_cast<double>(closed) / static_cast<double>(k);
  e.k = k;
  e.closed_count = closed;
  e.seed = seed;
  e.epsilon = error_bound(k, delta);
  e.delta = delta;
  e.bound_scale = 1.0;
  return e;
}

// Exact when the ratio is an integer, so e.g. a fully closed graph reports
// its triangle count with no rounding residue.
double exact_ratio(unsigned __int128 numerator, Count denominator) {
  if (numerator % denominator == 0)
    return static_cast<double>(static_cast<Count>(numerator / denominator));
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

void require_samples(Count k) {
  if (k < 1) throw DomainError("sample count must be >= 1");
}

// Vertices of one degree bin with wedge-weighted cumulative sums.
struct WeightedVertexSet {
  std::vector<VertexId> vertices;
  std::vector<Count> cumulative;
  Count total_wedges = 0;

  VertexId sample(Rng& rng) const {
    const Count x = rng.below(total_wedges);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
    return vertices[it - cumulative.begin()];
  }
};

WeightedVertexSet collect_bin(const DegreeIndex& index, const DegreeBin& bin) {
  WeightedVertexSet set;
  const Count hi = std::min<Count>(bin.hi, index.max_degree());
  for (Count d = std::max<Count>(bin.lo, 2); d <= hi; ++d) {
    const Count wd = choose2(d);
    for (VertexId v : index.vertices(d)) {
      set.vertices.push_back(v);
      set.total_wedges += wd;
      set.cumulative.push_back(set.total_wedges);
    }
  }
  return set;
}

// Closed count over k wedges drawn uniformly from the set's wedge universe.
// Draw i is substream i of `seed`, so results are thread-count independent.
Count closed_wedges_in_set(const Graph& g, const WeightedVertexSet& set,
                           Count k, std::uint64_t seed) {
  Count closed = 0;
  const auto draws = static_cast<std::int64_t>(k);
#pragma omp parallel for reduction(+ : closed) schedule(static)
  for (std::int64_t i = 0; i < draws; ++i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    const VertexId center = set.sample(rng);
    auto [a, b] = g.random_neighbor_pair(center, rng);
    if (g.has_edge(a, b)) ++closed;
  }
  return closed;
}

void require_degree(const DegreeIndex& index, Count d) {
  if (d < 2) throw DomainError("degree must be >= 2 to form wedges");
  if (index.count(d) == 0)
    throw DomainError("no vertices of degree " + std::to_string(d));
}

}  // namespace

Estimate estimate_global_cc(const Graph& g, const WedgeDistribution& dist,
                            Count k, std::uint64_t seed, double delta) {
  require_samples(k);
  Count closed = 0;
  const auto draws = static_cast<std::int64_t>(k);
#pragma omp parallel for reduction(+ : closed) schedule(static)
  for (std::int64_t i = 0; i < draws; ++i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    const Wedge w = sample_uniform_wedge(g, dist, rng);
    if (g.has_edge(w.end_a, w.end_b)) ++closed;
  }
  return make_coefficient_estimate(closed, k, seed, delta);
}

Estimate estimate_global_cc(const Graph& g, Count k, std::uint64_t seed,
                            double delta) {
  return estimate_global_cc(g, WedgeDistribution(g), k, seed, delta);
}

Estimate estimate_triangle_count(const Graph& g, const WedgeDistribution& dist,
                                 Count k, std::uint64_t seed, double delta) {
  Estimate e = estimate_global_cc(g, dist, k, seed, delta);
  const Count w = dist.total_wedges();
  e.value = exact_ratio(static_cast<unsigned __int128>(e.closed_count) * w, 3 * k);
  e.bound_scale = static_cast<double>(w) / 3.0;
  return e;
}

Estimate estimate_triangle_count(const Graph& g, Count k, std::uint64_t seed,
                                 double delta) {
  return estimate_triangle_count(g, WedgeDistribution(g), k, seed, delta);
}

Estimate estimate_local_cc(const Graph& g, Count k, std::uint64_t seed,
                           double delta, LocalCcMode mode) {
  require_samples(k);
  if (g.num_vertices() == 0) throw DomainError("graph has no vertices");

  std::vector<VertexId> eligible;
  if (mode == LocalCcMode::RequireDegreeTwo) {
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (g.degree(v) >= 2) eligible.push_back(v);
    if (eligible.empty()) throw DomainError("no vertex has degree >= 2");
  }
  const Count universe = mode == LocalCcMode::RequireDegreeTwo
                             ? eligible.size()
                             : g.num_vertices();

  Count closed = 0;
  const auto draws = static_cast<std::int64_t>(k);
#pragma omp parallel for reduction(+ : closed) schedule(static)
  for (std::int64_t i = 0; i < draws; ++i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    const Count pick = rng.below(universe);
    const VertexId v = mode == LocalCcMode::RequireDegreeTwo
                           ? eligible[pick]
                           : static_cast<VertexId>(pick);
    if (g.degree(v) < 2) continue;  // counts as an open wedge
    auto [a, b] = g.random_neighbor_pair(v, rng);
    if (g.has_edge(a, b)) ++closed;
  }
  return make_coefficient_estimate(closed, k, seed, delta);
}

Estimate estimate_degree_cc(const Graph& g, const DegreeIndex& index, Count d,
                            Count k, std::uint64_t seed, double delta) {
  require_degree(index, d);
  const DegreeBin bin{d, d};
  return estimate_binned_cc(g, index, {&bin, 1}, k, seed, delta)[0].estimate;
}

Estimate estimate_degree_triangles(const Graph& g, const DegreeIndex& index,
                                   Count d, Count k, std::uint64_t seed,
                                   double delta) {
  require_degree(index, d);
  require_samples(k);
  const WeightedVertexSet set = collect_bin(index, {d, d});
  const std::uint64_t stream_seed = mix64(seed, 0);

  // Closed wedges bucketed by how many of the triangle's vertices lie in
  // V_d; the center always does.
  Count with_one = 0, with_two = 0, with_three = 0;
  const auto draws = static_cast<std::int64_t>(k);
#pragma omp parallel for reduction(+ : with_one, with_two, with_three) \
    schedule(static)
  for (std::int64_t i = 0; i < draws; ++i) {
    Rng rng = Rng::substream(stream_seed, static_cast<std::uint64_t>(i));
    const VertexId center = set.sample(rng);
    auto [a, b] = g.random_neighbor_pair(center, rng);
    if (!g.has_edge(a, b)) continue;
    const int members = 1 + (g.degree(a) == d) + (g.degree(b) == d);
    if (members == 1)
      ++with_one;
    else if (members == 2)
      ++with_two;
    else
      ++with_three;
  }

  Estimate e;
  // Mean score is (with_one + with_two/2 + with_three/3) / k; scaled by W_d
  // via a common denominator of 6k so integer-valued results stay exact.
  const Count numerator = 6 * with_one + 3 * with_two + 2 * with_three;
  const Count wd = index.wedges(d);
  e.value = exact_ratio(static_cast<unsigned __int128>(numerator) * wd, 6 * k);
  e.k = k;
  e.closed_count = with_one + with_two + with_three;
  e.seed = seed;
  e.epsilon = error_bound(k, delta);
  e.delta = delta;
  e.bound_scale = static_cast<double>(wd);
  return e;
}

std::vector<DegreeBin> log2_degree_bins(const DegreeIndex& index) {
  std::vector<DegreeBin> bins;
  for (Count lo = 2, hi = 2; lo <= index.max_degree(); lo = hi + 1, hi = 2 * hi) {
    Count populated = 0;
    for (Count d = lo; d <= std::min<Count>(hi, index.max_degree()); ++d)
      populated += index.count(d);
    if (populated > 0) bins.push_back({lo, std::min<Count>(hi, index.max_degree())});
  }
  return bins;
}

std::vector<BinnedEstimate> estimate_binned_cc(const Graph& g,
                                               const DegreeIndex& index,
                                               std::span<const DegreeBin> bins,
                                               Count k, std::uint64_t seed,
                                               double delta, BinBudget budget) {
  require_samples(k);
  std::vector<WeightedVertexSet> sets;
  sets.reserve(bins.size());
  Count wedge_total = 0;
  for (const DegreeBin& bin : bins) {
    sets.push_back(collect_bin(index, bin));
    wedge_total += sets.back().total_wedges;
  }

  std::vector<BinnedEstimate> out(bins.size());
  for (std::size_t b = 0; b < bins.size(); ++b) {
    BinnedEstimate& row = out[b];
    row.bin = bins[b];
    row.vertex_count = sets[b].vertices.size();
    row.wedge_count = sets[b].total_wedges;
    if (row.wedge_count == 0) {
      row.skipped = true;
      continue;
    }
    Count k_bin = k;
    if (budget == BinBudget::TotalSplitByWedges) {
      k_bin = static_cast<Count>(std::llround(
          static_cast<double>(k) * static_cast<double>(row.wedge_count) /
          static_cast<double>(wedge_total)));
      k_bin = std::max<Count>(k_bin, 1);
    }
    const std::uint64_t bin_seed = mix64(seed, b);
    const Count closed = closed_wedges_in_set(g, sets[b], k_bin, bin_seed);
    row.estimate = make_coefficient_estimate(closed, k_bin, seed, delta);
  }
  return out;
}

TriangleSample sample_uniform_triangles(const Graph& g,
                                        const WedgeDistribution& dist,
                                        Count target, Count max_wedges,
                                        std::uint64_t seed) {
  if (target < 1) throw DomainError("triangle target must be >= 1");
  TriangleSample out;
  out.seed = seed;
  out.triangles.reserve(std::min<Count>(target, 1 << 20));
  for (Count i = 0; i < max_wedges && out.triangles.size() < target; ++i) {
    Rng rng = Rng::substream(seed, i);
    const Wedge w = sample_uniform_wedge(g, dist, rng);
    ++out.wedges_drawn;
    if (g.has_edge(w.end_a, w.end_b))
      out.triangles.push_back(make_triangle(g, w.center, w.end_a, w.end_b));
  }
  if (out.triangles.empty()) throw InsufficientClosureError(out.wedges_drawn);
  return out;
}

double triangle_sample_ratio_fraction(std::span<const Triangle> sample,
                                      double r) {
  if (r < 1.0) throw DomainError("degree ratio threshold must be >= 1");
  if (sample.empty()) throw DomainError("triangle sample is empty");
  Count matching = 0;
  for (const Triangle& t : sample) {
    const auto lo = static_cast<double>(std::min({t.deg_a, t.deg_b, t.deg_c}));
    const auto hi = static_cast<double>(std::max({t.deg_a, t.deg_b, t.deg_c}));
    if (hi >= r * lo) ++matching;
  }
  return static_cast<double>(matching) / static_cast<double>(sample.size());
}

}  // namespace triad
