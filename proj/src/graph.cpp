#include "triad/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace triad {

std::pair<std::uint64_t, std::uint64_t> decode_pair_index(std::uint64_t d,
                                                          std::uint64_t index) {
  // offset(a) = number of pairs whose first element is < a = a*(2d-a-1)/2.
  auto offset = [d](std::uint64_t a) -> std::uint64_t {
    unsigned __int128 wide = static_cast<unsigned __int128>(a) * (2 * d - a - 1);
    return static_cast<std::uint64_t>(wide / 2);
  };
  // Initial guess from the quadratic formula, then exact integer fixup (the
  // sqrt is inexact once d*d leaves the 53-bit range).
  const double dd = static_cast<double>(d);
  const double disc = (2.0 * dd - 1.0) * (2.0 * dd - 1.0) - 8.0 * static_cast<double>(index);
  std::uint64_t a = 0;
  if (disc > 0) {
    double root = (2.0 * dd - 1.0 - std::sqrt(disc)) / 2.0;
    if (root > 0) a = static_cast<std::uint64_t>(root);
  }
  if (a > d - 2) a = d - 2;
  while (a > 0 && offset(a) > index) --a;
  while (offset(a + 1) <= index) ++a;
  const std::uint64_t b = a + 1 + (index - offset(a));
  return {a, b};
}

Graph Graph::build(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges,
                   std::vector<std::uint64_t> labels) {
  Graph g;
  g.n_ = n;
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  }
  g.labels_ = std::move(labels);

  // Count both directions, skipping self-loops; duplicates removed after the
  // per-vertex sort.
  std::vector<Count> counts(static_cast<std::size_t>(n) + 1, 0);
  for (auto& [u, w] : edges) {
    if (u == w) continue;
    ++counts[u + 1];
    ++counts[w + 1];
  }
  std::vector<Count> offsets(counts);
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

  std::vector<VertexId> adj(offsets[n]);
  std::vector<Count> cursor(offsets.begin(), offsets.end() - 1);
  for (auto& [u, w] : edges) {
    if (u == w) continue;
    adj[cursor[u]++] = w;
    adj[cursor[w]++] = u;
  }
  edges.clear();
  edges.shrink_to_fit();

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.adjacency_.resize(adj.size());
  Count write = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto begin = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto end = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(begin, end);
    auto last = std::unique(begin, end);
    for (auto it = begin; it != last; ++it) g.adjacency_[write++] = *it;
    g.offsets_[v + 1] = write;
  }
  g.adjacency_.resize(write);
  g.adjacency_.shrink_to_fit();
  g.m_ = write / 2;
  for (VertexId v = 0; v < n; ++v) g.total_wedges_ += g.wedge_count(v);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId w) const {
  if (u == w) return false;
  if (degree(u) > degree(w)) std::swap(u, w);
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), w);
}

Count Graph::wedge_count(VertexId v) const {
  if (v >= n_) throw DomainError("vertex id out of range");
  return choose2(degree(v));
}

std::pair<VertexId, VertexId> Graph::random_neighbor_pair(VertexId v,
                                                          Rng& rng) const {
  const Count pairs = wedge_count(v);
  if (pairs == 0) throw DomainError("vertex has fewer than two neighbors");
  auto [i, j] = decode_pair_index(degree(v), rng.below(pairs));
  auto list = neighbors(v);
  return {list[i], list[j]};
}

void Graph::validate() const {
  if (offsets_.size() != static_cast<std::size_t>(n_) + 1)
    throw Error("offset table size mismatch");
  Count degree_sum = 0;
  for (VertexId v = 0; v < n_; ++v) {
    auto list = neighbors(v);
    degree_sum += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] >= n_) throw Error("neighbor id out of range");
      if (list[i] == v) throw Error("self-loop present");
      if (i > 0 && list[i] <= list[i - 1])
        throw Error("neighbor list not strictly increasing");
      if (!has_edge(list[i], v)) throw Error("adjacency not symmetric");
    }
  }
  if (degree_sum != 2 * m_) throw Error("degree sum does not equal 2m");
}

namespace {

constexpr std::array<char, 8> kCacheMagic = {'T', 'R', 'I', 'A', 'D', 'B', 'I', 'N'};
constexpr std::uint64_t kCacheVersion = 1;

void put_u64(std::ostream& out, std::uint64_t x) {
  std::array<unsigned char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b;
  in.read(reinterpret_cast<char*>(b.data()), 8);
  if (!in) throw IoError("truncated graph cache");
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return x;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::uint64_t, VertexId> id_of;
  std::vector<std::uint64_t> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;

  auto intern = [&](std::uint64_t label) -> VertexId {
    auto [it, inserted] = id_of.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;

    std::uint64_t endpoint[2];
    for (int t = 0; t < 2; ++t) {
      if (pos == std::string::npos)
        throw ParseError("expected two vertex labels", line_no);
      std::size_t consumed = 0;
      try {
        if (!std::isdigit(static_cast<unsigned char>(line[pos])))
          throw std::invalid_argument("not a digit");
        endpoint[t] = std::stoull(line.substr(pos), &consumed);
      } catch (const std::exception&) {
        throw ParseError("not a nonnegative integer: '" + line.substr(pos) + "'",
                         line_no);
      }
      pos = line.find_first_not_of(" \t\r", pos + consumed);
    }
    if (pos != std::string::npos)
      throw ParseError("trailing content after edge", line_no);

    const VertexId u = intern(endpoint[0]);
    const VertexId w = intern(endpoint[1]);
    edges.emplace_back(u, w);
  }
  const auto n = static_cast<VertexId>(labels.size());
  return Graph::build(n, std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_binary_cache(const Graph& g, std::ostream& out) {
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_u64(out, kCacheVersion);
  put_u64(out, g.num_vertices());
  put_u64(out, g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) put_u64(out, g.degree(v));
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w : g.neighbors(v)) put_u64(out, w);
  if (!out) throw IoError("short write while saving graph cache");
}

void write_binary_cache_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_binary_cache(g, out);
}

Graph read_binary_cache(std::istream& in) {
  std::array<char, 8> magic;
  in.read(magic.data(), magic.size());
  if (!in || magic != kCacheMagic) throw IoError("not a graph cache file");
  if (get_u64(in) != kCacheVersion) throw IoError("unsupported cache version");
  const std::uint64_t n = get_u64(in);
  const std::uint64_t m = get_u64(in);
  if (n > std::uint64_t{1} << 32) throw IoError("cache vertex count too large");

  std::vector<Count> degrees(n);
  Count degree_sum = 0;
  for (auto& d : degrees) {
    d = get_u64(in);
    degree_sum += d;
  }
  if (degree_sum != 2 * m) throw IoError("cache degree sum does not match m");

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (Count i = 0; i < degrees[v]; ++i) {
      const std::uint64_t w = get_u64(in);
      if (w >= n) throw IoError("cache neighbor id out of range");
      if (w > v) edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    }
  }
  Graph g = Graph::build(static_cast<VertexId>(n), std::move(edges));
  if (g.num_edges() != m) throw IoError("cache adjacency is not a simple graph");
  return g;
}

Graph read_binary_cache_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_binary_cache(in);
}

bool is_binary_cache_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::array<char, 8> magic;
  in.read(magic.data(), magic.size());
  return in && magic == kCacheMagic;
}

Graph load_graph_file(const std::string& path) {
  if (is_binary_cache_file(path)) return read_binary_cache_file(path);
  return load_edge_list_file(path);
}

DegreeIndex::DegreeIndex(const Graph& g) {
  const VertexId n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v)
    max_degree_ = std::max<Count>(max_degree_, g.degree(v));
  offsets_.assign(max_degree_ + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++offsets_[g.degree(v) + 1];
  for (std::size_t d = 1; d < offsets_.size(); ++d) offsets_[d] += offsets_[d - 1];
  by_degree_.resize(n);
  std::vector<Count> cursor(offsets_.begin(), offsets_.end() - 1);
  for (VertexId v = 0; v < n; ++v) by_degree_[cursor[g.degree(v)]++] = v;
}

}  // namespace triad
