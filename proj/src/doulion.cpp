#include "triad/doulion.hpp"

#include <algorithm>

#include "triad/exact.hpp"

namespace triad {

namespace {

void require_probability(double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw DomainError("edge retention probability must lie in (0, 1]");
}

double cube(double p) { return p * p * p; }

}  // namespace

Graph sparsify(const Graph& g, double p, std::uint64_t seed) {
  require_probability(p);
  std::vector<std::pair<VertexId, VertexId>> kept;
  Count edge_index = 0;
  g.for_each_edge([&](VertexId u, VertexId w) {
    const double coin =
        static_cast<double>(mix64(seed, edge_index) >> 11) * 0x1.0p-53;
    if (coin < p) kept.emplace_back(u, w);
    ++edge_index;
  });
  std::vector<std::uint64_t> labels = g.labels();
  return Graph::build(g.num_vertices(), std::move(kept), std::move(labels));
}

DoulionEstimate doulion_triangle_estimate(const Graph& g, double p,
                                          std::uint64_t seed) {
  require_probability(p);
  const Graph sparse = sparsify(g, p, seed);
  DoulionEstimate e;
  e.p = p;
  e.seed = seed;
  e.kept_edges = sparse.num_edges();
  e.sparsified_triangles = count_triangles(sparse);
  e.value = static_cast<double>(e.sparsified_triangles) / cube(p);
  return e;
}

DoulionEstimate doulion_global_cc(const Graph& g, double p, std::uint64_t seed) {
  const Count wedges = g.total_wedges();
  if (wedges == 0) throw DomainError("graph has no wedges");
  DoulionEstimate e = doulion_triangle_estimate(g, p, seed);
  e.value = (3.0 * e.value) / static_cast<double>(wedges);
  return e;
}

DoulionEstimate doulion_local_cc(const Graph& g, double p, std::uint64_t seed,
                                 double cap) {
  require_probability(p);
  if (g.num_vertices() == 0) throw DomainError("graph has no vertices");
  const Graph sparse = sparsify(g, p, seed);

  std::vector<Count> sparse_triangles(g.num_vertices(), 0);
  const Count t_sparse = for_each_triangle(
      sparse,
      [&](const Triangle& t) {
#pragma omp atomic
        ++sparse_triangles[t.a];
#pragma omp atomic
        ++sparse_triangles[t.b];
#pragma omp atomic
        ++sparse_triangles[t.c];
      },
      true);

  const double p3 = cube(p);
  double sum = 0.0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const Count wv = choose2(g.degree(v));  // wedges in the original graph
    if (wv == 0) continue;
    const double cc = static_cast<double>(sparse_triangles[v]) / p3 /
                      static_cast<double>(wv);
    sum += std::min(cc, cap);
  }

  DoulionEstimate e;
  e.p = p;
  e.seed = seed;
  e.kept_edges = sparse.num_edges();
  e.sparsified_triangles = t_sparse;
  e.value = sum / static_cast<double>(g.num_vertices());
  return e;
}

}  // namespace triad
