#include "triad/exact.hpp"

namespace triad {

Count count_triangles(const Graph& g) {
  return for_each_triangle(g, [](const Triangle&) {}, true);
}

Count count_triangles_serial(const Graph& g) {
  return for_each_triangle_serial_ref(g, [](const Triangle&) {});
}

Count enumerate_triangles(const Graph& g,
                          const std::function<void(const Triangle&)>& consumer,
                          ConsumerMode mode) {
  return for_each_triangle(g, [&](const Triangle& t) { consumer(t); },
                           mode == ConsumerMode::Concurrent);
}

namespace {

// Shared aggregation from a canonical triangle stream into full stats.
template <class Kernel>
ExactTriadStats stats_from_kernel(const Graph& g, Kernel&& kernel) {
  const VertexId n = g.num_vertices();
  ExactTriadStats s;
  s.triangles_per_vertex.assign(n, 0);
  s.cc_per_vertex.assign(n, 0.0);

  Count max_degree = 0;
  for (VertexId v = 0; v < n; ++v)
    max_degree = std::max<Count>(max_degree, g.degree(v));
  std::vector<Count> triangles_by_degree(max_degree + 1, 0);

  s.triangles = kernel(s.triangles_per_vertex, triangles_by_degree);
  s.wedges = g.total_wedges();
  s.global_cc =
      s.wedges == 0 ? 0.0 : (3.0 * static_cast<double>(s.triangles)) /
                                static_cast<double>(s.wedges);

  s.per_degree.assign(max_degree + 1, DegreeStats{});
  double cc_sum = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const Count d = g.degree(v);
    const Count wv = choose2(d);
    if (wv > 0)
      s.cc_per_vertex[v] = static_cast<double>(s.triangles_per_vertex[v]) /
                           static_cast<double>(wv);
    cc_sum += s.cc_per_vertex[v];
    auto& row = s.per_degree[d];
    ++row.n_d;
    row.wedges += wv;
    row.mean_cc += s.cc_per_vertex[v];
  }
  s.local_cc = n == 0 ? 0.0 : cc_sum / static_cast<double>(n);
  for (Count d = 0; d <= max_degree; ++d) {
    auto& row = s.per_degree[d];
    row.triangles = triangles_by_degree[d];
    if (row.n_d > 0) row.mean_cc /= static_cast<double>(row.n_d);
  }
  return s;
}

// Counts the triangle once per distinct degree value it touches.
inline void tally_degrees(std::vector<Count>& by_degree, const Triangle& t,
                          bool atomic) {
  const VertexId da = t.deg_a, db = t.deg_b, dc = t.deg_c;
  auto bump = [&](VertexId d) {
    if (atomic) {
#pragma omp atomic
      ++by_degree[d];
    } else {
      ++by_degree[d];
    }
  };
  bump(da);
  if (db != da) bump(db);
  if (dc != da && dc != db) bump(dc);
}

}  // namespace

ExactTriadStats exact_stats(const Graph& g) {
  return stats_from_kernel(g, [&](std::vector<Count>& tv, std::vector<Count>& td) {
    return for_each_triangle(
        g,
        [&](const Triangle& t) {
#pragma omp atomic
          ++tv[t.a];
#pragma omp atomic
          ++tv[t.b];
#pragma omp atomic
          ++tv[t.c];
          tally_degrees(td, t, true);
        },
        true);
  });
}

ExactTriadStats exact_stats_serial(const Graph& g) {
  return stats_from_kernel(g, [&](std::vector<Count>& tv, std::vector<Count>& td) {
    return for_each_triangle_serial_ref(g, [&](const Triangle& t) {
      ++tv[t.a];
      ++tv[t.b];
      ++tv[t.c];
      tally_degrees(td, t, false);
    });
  });
}

double triangle_degree_ratio_fraction(const Graph& g, double r) {
  if (r < 1.0) throw DomainError("degree ratio threshold must be >= 1");
  Count matching = 0;
  const Count total = for_each_triangle(
      g,
      [&](const Triangle& t) {
        const auto lo = static_cast<double>(std::min({t.deg_a, t.deg_b, t.deg_c}));
        const auto hi = static_cast<double>(std::max({t.deg_a, t.deg_b, t.deg_c}));
        if (hi >= r * lo) {
#pragma omp atomic
          ++matching;
        }
      },
      true);
  if (total == 0)
    throw DomainError("degree ratio statistic undefined on a triangle-free graph");
  return static_cast<double>(matching) / static_cast<double>(total);
}

}  // namespace triad
