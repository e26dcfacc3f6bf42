#pragma once

#include <cstdint>
#include <limits>

#include "triad/graph.hpp"

namespace triad {

// Output of a sparsify-and-rescale run. Doulion has no Hoeffding-style
// (epsilon, delta) guarantee, so these carry the raw ingredients instead.
struct DoulionEstimate {
  double value = 0;
  double p = 0;
  Count sparsified_triangles = 0;
  Count kept_edges = 0;
  std::uint64_t seed = 0;
};

// Keeps each edge independently with probability p and renormalizes the
// result into a valid Graph. The per-edge coin for edge index e is a pure
// function of (seed, e).
Graph sparsify(const Graph& g, double p, std::uint64_t seed);

// T' / p^3 where T' counts triangles in the sparsified graph.
DoulionEstimate doulion_triangle_estimate(const Graph& g, double p,
                                          std::uint64_t seed);

// 3 (T'/p^3) / W with W taken from the original graph.
DoulionEstimate doulion_global_cc(const Graph& g, double p, std::uint64_t seed);

// Mean over all n vertices of min(T'_v / p^3 / W_v, cap), with W_v from the
// original graph and 0 for wedge-free vertices. Per-vertex values are not
// clamped by default; pass cap = 1.0 to clamp coefficients at 1.
DoulionEstimate doulion_local_cc(
    const Graph& g, double p, std::uint64_t seed,
    double cap = std::numeric_limits<double>::infinity());

}  // namespace triad
