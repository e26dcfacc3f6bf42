#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "triad/errors.hpp"
#include "triad/rng.hpp"

namespace triad {

using VertexId = std::uint32_t;
using Count = std::uint64_t;

// C(d, 2); the operand is widened to 64 bits so the product is exact for any
// degree representable in 32 bits.
inline Count choose2(Count d) { return d < 2 ? 0 : d * (d - 1) / 2; }

// Decodes a pair index in [0, C(d,2)) into (a, b) with 0 <= a < b < d, pairs
// ordered (0,1),(0,2),...,(0,d-1),(1,2),...  Exactly one index per pair.
std::pair<std::uint64_t, std::uint64_t> decode_pair_index(std::uint64_t d,
                                                          std::uint64_t index);

// Immutable simple undirected graph in CSR form: sorted, strictly increasing
// neighbor lists, no self-loops, no parallel edges. Safe to share across
// threads once built.
class Graph {
 public:
  Graph() = default;

  // Normalizes raw edges: self-loops and duplicates (in either direction)
  // are dropped. `labels` maps internal id -> original label and must have
  // size n when nonempty; empty means identity labels.
  static Graph build(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges,
                     std::vector<std::uint64_t> labels = {});

  VertexId num_vertices() const { return n_; }
  Count num_edges() const { return m_; }

  VertexId degree(VertexId v) const {
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  // True iff {u, w} is an edge; searches the shorter of the two sorted lists.
  bool has_edge(VertexId u, VertexId w) const;

  // Number of wedges centered at v: C(d_v, 2).
  Count wedge_count(VertexId v) const;

  // Sum of wedge_count over all vertices; cached at build time.
  Count total_wedges() const { return total_wedges_; }

  // Uniform unordered pair of distinct neighbors of v; requires d_v >= 2.
  // Draws one index in [0, C(d_v,2)) and decodes it, so every pair has
  // probability exactly 1/C(d_v,2).
  std::pair<VertexId, VertexId> random_neighbor_pair(VertexId v, Rng& rng) const;

  std::uint64_t original_label(VertexId v) const { return labels_[v]; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }

  // Structural self-check (symmetry, sortedness, no loops, degree sum);
  // throws Error on any violation.
  void validate() const;

  // Visits each undirected edge once as (u, w) with u < w, increasing u.
  template <class F>
  void for_each_edge(F&& f) const {
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId w : neighbors(u)) {
        if (w > u) f(u, w);
      }
    }
  }

 private:
  VertexId n_ = 0;
  Count m_ = 0;
  Count total_wedges_ = 0;
  std::vector<Count> offsets_;         // n + 1
  std::vector<VertexId> adjacency_;    // 2m
  std::vector<std::uint64_t> labels_;  // internal id -> original label
};

// Text edge list: one "u v" pair per line, whitespace separated, nonnegative
// integer labels; lines starting with '#' are comments. Labels are remapped
// to contiguous ids in first-appearance order. A label that appears only on
// dropped lines (self-loops, repeats) still names a vertex.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Binary cache of the normalized graph: magic, version, n, m, degree array,
// concatenated adjacency, all little-endian 64-bit. Original labels are not
// stored; a cache-loaded graph reports identity labels.
void write_binary_cache(const Graph& g, std::ostream& out);
void write_binary_cache_file(const Graph& g, const std::string& path);
Graph read_binary_cache(std::istream& in);
Graph read_binary_cache_file(const std::string& path);
bool is_binary_cache_file(const std::string& path);

// Loads either format, sniffing the cache magic.
Graph load_graph_file(const std::string& path);

// Vertices grouped by degree, with per-degree counts and wedge totals.
class DegreeIndex {
 public:
  explicit DegreeIndex(const Graph& g);

  Count max_degree() const { return max_degree_; }

  // n_d: number of vertices of degree d (0 for non-occurring d).
  Count count(Count d) const {
    return d > max_degree_ ? 0 : offsets_[d + 1] - offsets_[d];
  }

  // V_d in ascending id order.
  std::span<const VertexId> vertices(Count d) const {
    if (d > max_degree_) return {};
    return {by_degree_.data() + offsets_[d], by_degree_.data() + offsets_[d + 1]};
  }

  // W_d = n_d * C(d, 2).
  Count wedges(Count d) const { return count(d) * choose2(d); }

 private:
  Count max_degree_ = 0;
  std::vector<Count> offsets_;       // max_degree + 2
  std::vector<VertexId> by_degree_;  // n vertices grouped by degree
};

inline DegreeIndex degree_index(const Graph& g) { return DegreeIndex(g); }

}  // namespace triad
