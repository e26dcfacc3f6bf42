#pragma once

// Independent dense-matrix oracle: every triadic quantity recomputed from
// first principles in O(n^3), with no shared code path into the library's
// enumeration or samplers.

#include <map>
#include <vector>

#include "triad/graph.hpp"

namespace triad::testing {

struct BruteStats {
  Count wedges = 0;
  Count triangles = 0;
  Count ordered_closed_triples = 0;  // 6T
  double global_cc = 0;
  double local_cc = 0;
  std::vector<Count> triangles_per_vertex;
  std::vector<double> cc_per_vertex;
  std::map<Count, Count> n_d;
  std::map<Count, Count> wedges_d;
  std::map<Count, Count> triangles_d;  // triangles touching >= 1 degree-d vertex
  std::map<Count, double> cc_d;
};

inline BruteStats brute_stats(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Count> deg(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v)) {
      adj[v][w] = true;
      ++deg[v];
    }

  BruteStats s;
  s.triangles_per_vertex.assign(n, 0);
  s.cc_per_vertex.assign(n, 0.0);

  for (VertexId v = 0; v < n; ++v) s.wedges += deg[v] * (deg[v] - 1) / 2;

  // All ordered triples with all three edges present.
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b)
      for (VertexId c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (adj[a][b] && adj[b][c] && adj[a][c]) ++s.ordered_closed_triples;
      }
  s.triangles = s.ordered_closed_triples / 6;

  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c) {
        if (!(adj[a][b] && adj[b][c] && adj[a][c])) continue;
        ++s.triangles_per_vertex[a];
        ++s.triangles_per_vertex[b];
        ++s.triangles_per_vertex[c];
        const Count da = deg[a], db = deg[b], dc = deg[c];
        ++s.triangles_d[da];
        if (db != da) ++s.triangles_d[db];
        if (dc != da && dc != db) ++s.triangles_d[dc];
      }

  if (s.wedges > 0)
    s.global_cc = 3.0 * static_cast<double>(s.triangles) /
                  static_cast<double>(s.wedges);

  double cc_sum = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const Count wv = deg[v] * (deg[v] - 1) / 2;
    if (wv > 0)
      s.cc_per_vertex[v] = static_cast<double>(s.triangles_per_vertex[v]) /
                           static_cast<double>(wv);
    cc_sum += s.cc_per_vertex[v];
    ++s.n_d[deg[v]];
    s.wedges_d[deg[v]] += wv;
    s.cc_d[deg[v]] += s.cc_per_vertex[v];
  }
  if (n > 0) s.local_cc = cc_sum / static_cast<double>(n);
  for (auto& [d, sum] : s.cc_d) sum /= static_cast<double>(s.n_d[d]);
  return s;
}

}  // namespace triad::testing
