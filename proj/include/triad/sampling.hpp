#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "triad/exact.hpp"
#include "triad/graph.hpp"
#include "triad/rng.hpp"

namespace triad {

// 99.9% confidence unless a caller asks otherwise.
inline constexpr double kDefaultDelta = 0.001;

// Samples needed for additive error epsilon at confidence 1 - delta:
// k = ceil(0.5 * epsilon^-2 * ln(2/delta)).
Count sample_size(double epsilon, double delta);

// Inverse direction: the additive error bound implied by k samples at
// confidence 1 - delta, epsilon = sqrt(0.5 * ln(2/delta) / k).
double error_bound(Count k, double delta);

// A (k, epsilon, delta) triple tied together by the bound above.
struct SamplePlan {
  Count k = 0;
  double epsilon = 0;
  double delta = kDefaultDelta;
};

SamplePlan plan_from_error(double epsilon, double delta = kDefaultDelta);
SamplePlan plan_from_samples(Count k, double delta = kDefaultDelta);

// A length-2 path: center vertex plus an unordered pair of its neighbors.
struct Wedge {
  VertexId center;
  VertexId end_a;
  VertexId end_b;
};

// Per-vertex cumulative wedge counts; selecting a vertex by a uniform draw
// in [0, W) picks v with probability exactly W_v / W.
class WedgeDistribution {
 public:
  explicit WedgeDistribution(const Graph& g);

  Count total_wedges() const { return total_; }
  VertexId sample_center(Rng& rng) const;

 private:
  std::vector<Count> cumulative_;
  Count total_ = 0;
};

inline WedgeDistribution build_wedge_distribution(const Graph& g) {
  return WedgeDistribution(g);
}

// Uniform over all W wedges: weighted center pick, then a uniform neighbor
// pair of the center.
Wedge sample_uniform_wedge(const Graph& g, const WedgeDistribution& dist, Rng& rng);

// Estimator output. The guarantee reads |value - target| < epsilon *
// bound_scale with probability > 1 - delta; bound_scale is 1 for coefficient
// estimators, W/3 for the triangle-count estimator and W_d for the
// degree-triangle estimator.
struct Estimate {
  double value = 0;
  Count k = 0;
  Count closed_count = 0;
  std::uint64_t seed = 0;
  double epsilon = 0;
  double delta = kDefaultDelta;
  double bound_scale = 1.0;
};

// Global clustering coefficient: closed fraction of k uniform wedges.
Estimate estimate_global_cc(const Graph& g, const WedgeDistribution& dist,
                            Count k, std::uint64_t seed,
                            double delta = kDefaultDelta);
Estimate estimate_global_cc(const Graph& g, Count k, std::uint64_t seed,
                            double delta = kDefaultDelta);

// Triangle count: closed fraction times W/3.
Estimate estimate_triangle_count(const Graph& g, const WedgeDistribution& dist,
                                 Count k, std::uint64_t seed,
                                 double delta = kDefaultDelta);
Estimate estimate_triangle_count(const Graph& g, Count k, std::uint64_t seed,
                                 double delta = kDefaultDelta);

enum class LocalCcMode {
  // Vertices with degree < 2 stay in the vertex universe and always score
  // an open wedge, matching the convention that their coefficient is 0.
  IncludeAllVertices,
  // Restrict the universe to degree >= 2; the estimate then targets the
  // mean coefficient over those vertices only.
  RequireDegreeTwo,
};

// Local (mean per-vertex) clustering coefficient: uniform vertex, then a
// uniform neighbor pair.
Estimate estimate_local_cc(const Graph& g, Count k, std::uint64_t seed,
                           double delta = kDefaultDelta,
                           LocalCcMode mode = LocalCcMode::IncludeAllVertices);

// Mean clustering coefficient of degree-d vertices. Requires d >= 2 and at
// least one vertex of that degree.
Estimate estimate_degree_cc(const Graph& g, const DegreeIndex& index, Count d,
                            Count k, std::uint64_t seed,
                            double delta = kDefaultDelta);

// Number of triangles incident to at least one degree-d vertex. Each closed
// sampled wedge scores 1, 1/2 or 1/3 according to how many of its triangle's
// vertices have degree d; the estimate is W_d times the mean score and the
// guarantee is |value - T_d| < epsilon * W_d.
Estimate estimate_degree_triangles(const Graph& g, const DegreeIndex& index,
                                   Count d, Count k, std::uint64_t seed,
                                   double delta = kDefaultDelta);

// Inclusive degree range.
struct DegreeBin {
  Count lo = 0;
  Count hi = 0;
};

// Logarithmic bins over occurring degrees >= 2: {2}, {3,4}, {5..8}, ...
std::vector<DegreeBin> log2_degree_bins(const DegreeIndex& index);

struct BinnedEstimate {
  DegreeBin bin;
  Count vertex_count = 0;  // vertices with degree in the bin (and >= 2)
  Count wedge_count = 0;   // wedges centered in the bin
  bool skipped = false;    // bin had no wedges
  Estimate estimate;
};

enum class BinBudget {
  PerBin,             // k samples in every bin
  TotalSplitByWedges, // split k across bins proportionally to wedge counts
};

// Per-bin closed-wedge fraction. Vertices are weighted by their wedge counts
// within the bin, so each wedge whose center lies in the bin is equally
// likely; the estimated quantity is the bin's wedge-weighted coefficient,
// which equals the plain mean of per-vertex coefficients only when all
// degrees in the bin are equal.
std::vector<BinnedEstimate> estimate_binned_cc(
    const Graph& g, const DegreeIndex& index, std::span<const DegreeBin> bins,
    Count k, std::uint64_t seed, double delta = kDefaultDelta,
    BinBudget budget = BinBudget::PerBin);

struct TriangleSample {
  std::vector<Triangle> triangles;
  Count wedges_drawn = 0;
  std::uint64_t seed = 0;
};

// I.i.d. uniform triangles with replacement (duplicates retained): draws
// uniform wedges and keeps each closed one as its triangle. Stops at `target`
// triangles or `max_wedges` draws; throws InsufficientClosureError when the
// budget is exhausted with no triangle at all.
TriangleSample sample_uniform_triangles(const Graph& g,
                                        const WedgeDistribution& dist,
                                        Count target, Count max_wedges,
                                        std::uint64_t seed);

// Fraction of the sampled triangles whose max/min degree ratio is >= r.
double triangle_sample_ratio_fraction(std::span<const Triangle> sample, double r);

}  // namespace triad
