#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "triad/graph.hpp"

namespace triad {

// Canonical triangle: vertex ids with a < b < c plus their degrees.
struct Triangle {
  VertexId a, b, c;
  VertexId deg_a, deg_b, deg_c;
};

inline Triangle make_triangle(const Graph& g, VertexId x, VertexId y, VertexId z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return {x, y, z, g.degree(x), g.degree(y), g.degree(z)};
}

// True when edge {u, w} is assigned to u: the endpoint with smaller degree
// owns the edge, ties broken by smaller id.
inline bool owns_edge(const Graph& g, VertexId u, VertexId w) {
  const VertexId du = g.degree(u), dw = g.degree(w);
  return du < dw || (du == dw && u < w);
}

// Primary enumeration kernel: every vertex checks closure only for wedges
// formed by the edges assigned to it, so each triangle is emitted exactly
// once (at its minimum (degree, id) vertex). In parallel mode `emit` runs
// concurrently from multiple threads.
template <class F>
Count for_each_triangle(const Graph& g, F&& emit, bool parallel = true) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  Count total = 0;
#pragma omp parallel if (parallel)
  {
    std::vector<VertexId> owned;
    Count local = 0;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t vi = 0; vi < n; ++vi) {
      const auto v = static_cast<VertexId>(vi);
      owned.clear();
      for (VertexId w : g.neighbors(v))
        if (owns_edge(g, v, w)) owned.push_back(w);
      for (std::size_t i = 0; i + 1 < owned.size(); ++i)
        for (std::size_t j = i + 1; j < owned.size(); ++j)
          if (g.has_edge(owned[i], owned[j])) {
            ++local;
            emit(make_triangle(g, v, owned[i], owned[j]));
          }
    }
#pragma omp atomic
    total += local;
  }
  return total;
}

// Serial reference kernel, kept independent of the oriented kernel for
// testing: node iterator with sorted-list intersection. Emits triangles in
// increasing (a, b, c) order.
template <class F>
Count for_each_triangle_serial_ref(const Graph& g, F&& emit) {
  Count total = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      auto iu = std::lower_bound(nu.begin(), nu.end(), v + 1);
      auto iv = std::lower_bound(nv.begin(), nv.end(), v + 1);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          ++total;
          emit(make_triangle(g, u, v, *iu));
          ++iu;
          ++iv;
        }
      }
    }
  }
  return total;
}

Count count_triangles(const Graph& g);
Count count_triangles_serial(const Graph& g);

enum class ConsumerMode { Serial, Concurrent };

// Delivers each triangle exactly once in canonical form; returns T. Serial
// mode guarantees single-threaded, deterministic-order invocation.
Count enumerate_triangles(const Graph& g,
                          const std::function<void(const Triangle&)>& consumer,
                          ConsumerMode mode = ConsumerMode::Serial);

struct DegreeStats {
  Count n_d = 0;       // vertices of this degree
  Count wedges = 0;    // W_d = n_d * C(d, 2)
  Count triangles = 0; // triangles incident to >= 1 vertex of this degree
  double mean_cc = 0;  // C_d
};

struct ExactTriadStats {
  Count wedges = 0;     // W
  Count triangles = 0;  // T
  double global_cc = 0; // 3T/W, 0 when W == 0
  double local_cc = 0;  // mean of per-vertex coefficients
  std::vector<Count> triangles_per_vertex;
  std::vector<double> cc_per_vertex;  // T_v / C(d_v,2); 0 when d_v < 2
  std::vector<DegreeStats> per_degree;  // indexed by degree, size max_degree+1
};

// Exact computation of every triadic measure by full enumeration.
ExactTriadStats exact_stats(const Graph& g);
// Same values from the serial reference kernel.
ExactTriadStats exact_stats_serial(const Graph& g);

// Fraction of triangles whose max/min degree ratio is >= r. Requires r >= 1
// and at least one triangle.
double triangle_degree_ratio_fraction(const Graph& g, double r);

}  // namespace triad
