#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thinness/vertex_set.hpp"

namespace thinness {

using Edge = std::pair<Vertex, Vertex>;

class Graph;

/// Accumulates edges for a Graph; the Graph itself is immutable.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n), adjacency_(n, VertexSet(n)) {}

  std::size_t size() const { return n_; }

  /// Adds {u, v}; repeated edges are absorbed. Self-loops and out-of-range
  /// endpoints are rejected.
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
      throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }

  Graph build() &&;
  Graph build() const&;

 private:
  std::size_t n_;
  std::vector<VertexSet> adjacency_;
};

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    *this = std::move(b).build();
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t size() const { return adjacency_.size(); }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }

  /// Open neighbourhood N(u).
  const VertexSet& neighbors(Vertex u) const { return adjacency_[u]; }

  /// Closed neighbourhood N[u].
  VertexSet closed_neighbors(Vertex u) const {
    VertexSet s = adjacency_[u];
    s.insert(u);
    return s;
  }

  std::size_t degree(Vertex u) const { return adjacency_[u].size(); }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adjacency_) total += row.size();
    return total / 2;
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < size(); ++u)
      adjacency_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adjacency_;
};

inline Graph GraphBuilder::build() && {
  Graph g;
  g.adjacency_ = std::move(adjacency_);
  return g;
}

inline Graph GraphBuilder::build() const& {
  Graph g;
  g.adjacency_ = adjacency_;
  return g;
}

// ---------------------------------------------------------------------------
// Structured families

enum class CrownSide { A, B };

/// Vertex identities of CR_n: v_i = i-1 (side A) and v'_i = n+i-1 (side B),
/// 1 <= i <= n.
struct CrownLabeling {
  std::size_t n = 0;

  Vertex v(std::size_t i) const { return i - 1; }
  Vertex v_prime(std::size_t i) const { return n + i - 1; }

  CrownSide side(Vertex x) const { return x < n ? CrownSide::A : CrownSide::B; }
  Vertex mirror(Vertex x) const { return x < n ? x + n : x - n; }
  /// 1-based index i of v_i or v'_i.
  std::size_t index(Vertex x) const { return (x < n ? x : x - n) + 1; }

  std::vector<Vertex> side_a() const {
    std::vector<Vertex> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
  }
  std::vector<Vertex> side_b() const {
    std::vector<Vertex> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = n + i;
    return out;
  }
};

/// Coordinates of GR_{rows,cols}: (i, j) maps to (i-1)*cols + (j-1).
struct GridLabeling {
  std::size_t rows = 0;
  std::size_t cols = 0;

  Vertex at(std::size_t i, std::size_t j) const { return (i - 1) * cols + (j - 1); }
  std::pair<std::size_t, std::size_t> coord(Vertex v) const {
    return {v / cols + 1, v % cols + 1};
  }
  bool contains(long i, long j) const {
    return i >= 1 && j >= 1 && static_cast<std::size_t>(i) <= rows &&
           static_cast<std::size_t>(j) <= cols;
  }
};

struct CrownGraph {
  Graph graph;
  CrownLabeling labeling;
};

struct GridGraph {
  Graph graph;
  GridLabeling labeling;
};

inline CrownGraph crown(std::size_t n) {
  if (n == 0) throw std::invalid_argument("crown: n must be positive");
  CrownLabeling lab{n};
  GraphBuilder b(2 * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) b.add_edge(lab.v(i), lab.v_prime(j));
  return {std::move(b).build(), lab};
}

inline GridGraph grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid: dimensions must be positive");
  GridLabeling lab{rows, cols};
  GraphBuilder b(rows * cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) {
      if (i < rows) b.add_edge(lab.at(i, j), lab.at(i + 1, j));
      if (j < cols) b.add_edge(lab.at(i, j), lab.at(i, j + 1));
    }
  return {std::move(b).build(), lab};
}

inline Graph edgeless(std::size_t n) { return GraphBuilder(n).build(); }

inline Graph complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete: n must be positive");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

/// K_{p,q}: side of size p is 0..p-1.
inline Graph complete_bipartite(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("complete_bipartite: sides must be positive");
  GraphBuilder b(p + q);
  for (Vertex u = 0; u < p; ++u)
    for (Vertex v = 0; v < q; ++v) b.add_edge(u, p + v);
  return std::move(b).build();
}

/// nK_2 with edges (i, n+i).
inline Graph matching_nk2(std::size_t n) {
  if (n == 0) throw std::invalid_argument("matching_nk2: n must be positive");
  GraphBuilder b(2 * n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, n + i);
  return std::move(b).build();
}

inline Graph path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path: n must be positive");
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

/// Erdos-Renyi G(n, p).
template <typename Rng>
Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Operators

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

namespace detail {
inline GraphBuilder side_by_side(const Graph& g1, const Graph& g2) {
  const std::size_t off = g1.size();
  GraphBuilder b(g1.size() + g2.size());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(off + u, off + v);
  return b;
}
}  // namespace detail

/// Disjoint union; vertices of g2 are shifted by |V(g1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return detail::side_by_side(g1, g2).build();
}

/// Disjoint union plus every edge between the two parts.
inline Graph join(const Graph& g1, const Graph& g2) {
  auto b = detail::side_by_side(g1, g2);
  for (Vertex u = 0; u < g1.size(); ++u)
    for (Vertex v = 0; v < g2.size(); ++v) b.add_edge(u, g1.size() + v);
  return std::move(b).build();
}

struct InducedSubgraph {
  Graph graph;
  /// new id -> original id (increasing).
  std::vector<Vertex> to_original;
  /// original id -> new id, empty when dropped.
  std::vector<std::optional<Vertex>> from_original;
};

/// G[S]; kept vertices are renumbered in increasing order of original id.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.from_original.assign(g.size(), std::nullopt);
  for (Vertex v : keep) {
    if (v >= g.size())
      throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    out.from_original[v] = 0;
  }
  for (Vertex v = 0; v < g.size(); ++v)
    if (out.from_original[v]) {
      out.from_original[v] = out.to_original.size();
      out.to_original.push_back(v);
    }
  GraphBuilder b(out.to_original.size());
  for (Vertex a = 0; a < out.to_original.size(); ++a)
    for (Vertex c = a + 1; c < out.to_original.size(); ++c)
      if (g.adjacent(out.to_original[a], out.to_original[c])) b.add_edge(a, c);
  out.graph = std::move(b).build();
  return out;
}

inline bool is_complete_graph(const Graph& g) {
  const std::size_t n = g.size();
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

}  // namespace thinness
