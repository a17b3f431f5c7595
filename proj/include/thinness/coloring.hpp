#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thinness/graph.hpp"
#include "thinness/layout.hpp"

namespace thinness::coloring {

enum class Pattern { none, S1, S2, S3, S4, S5, S6 };

inline std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::none: return "none";
    case Pattern::S1: return "S1";
    case Pattern::S2: return "S2";
    case Pattern::S3: return "S3";
    case Pattern::S4: return "S4";
    case Pattern::S5: return "S5";
    case Pattern::S6: return "S6";
  }
  return "none";
}

/// Result of an ordered-pattern search. `witness` lists the occurrence in
/// increasing position.
struct PatternVerdict {
  Pattern pattern = Pattern::none;
  std::vector<Vertex> witness;

  bool ok() const { return pattern == Pattern::none; }
  explicit operator bool() const { return ok(); }
};

namespace detail {

inline std::vector<std::size_t> positions(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.size())
    throw MalformedLayout("order has " + std::to_string(order.size()) + " vertices, graph has " +
                          std::to_string(g.size()));
  std::vector<std::size_t> pos(g.size(), g.size());
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (order[p] >= g.size()) throw MalformedLayout("order contains out-of-range vertex " + std::to_string(order[p]));
    if (pos[order[p]] != g.size()) throw MalformedLayout("order repeats vertex " + std::to_string(order[p]));
    pos[order[p]] = p;
  }
  return pos;
}

/// First ordered triple x < y < z (lexicographic by positions) matching
/// S1/S2, or also S3 when `proper`.
inline PatternVerdict interval_patterns(const Graph& g, std::span<const Vertex> order, bool proper) {
  positions(g, order);
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const Vertex x = order[a], y = order[b], z = order[c];
        if (!g.adjacent(x, z)) continue;
        const bool xy = g.adjacent(x, y), yz = g.adjacent(y, z);
        if (!yz) return {xy ? Pattern::S2 : Pattern::S1, {x, y, z}};
        if (proper && !xy) return {Pattern::S3, {x, y, z}};
      }
  return {};
}

}  // namespace detail

/// Ok iff no ordered S1 or S2, i.e. `order` is an interval order.
inline PatternVerdict verify_interval_order(const Graph& g, std::span<const Vertex> order) {
  return detail::interval_patterns(g, order, false);
}

/// Ok iff no ordered S1, S2 or S3, i.e. `order` is a proper interval order.
inline PatternVerdict verify_proper_interval_order(const Graph& g, std::span<const Vertex> order) {
  return detail::interval_patterns(g, order, true);
}

/// Ok iff there is no induced P4 a-b-c-d with a < b and d < c. A failure
/// reports the P4 as it appears along the order, tagged S4, S5 or S6.
inline PatternVerdict verify_perfect_order(const Graph& g, std::span<const Vertex> order) {
  const auto pos = detail::positions(g, order);
  std::optional<PatternVerdict> best;
  std::size_t best_key = 0;
  for (auto [u, w] : g.edges())
    for (auto [b, c] : {std::pair{u, w}, std::pair{w, u}}) {
      // middle edge b-c, ends a ~ b and d ~ c
      g.neighbors(b).for_each([&](Vertex a) {
        if (a == c || g.adjacent(a, c) || pos[a] > pos[b]) return;
        g.neighbors(c).for_each([&](Vertex d) {
          if (d == b || g.adjacent(d, b) || g.adjacent(d, a) || pos[d] > pos[c]) return;
          std::vector<Vertex> p4{a, b, c, d};
          if (pos[d] < pos[a]) p4 = {d, c, b, a};
          // now p4[0] is the first vertex along the order
          const Vertex pa = p4[0], pb = p4[1], pc = p4[2], pd = p4[3];
          Pattern kind;
          if (pos[pd] < pos[pb])
            kind = pos[pb] < pos[pc] ? Pattern::S4 : Pattern::S6;
          else
            kind = Pattern::S5;
          std::vector<Vertex> seq{pa, pb, pc, pd};
          std::sort(seq.begin(), seq.end(), [&](Vertex x, Vertex y) { return pos[x] < pos[y]; });
          std::size_t key = 0;
          for (Vertex x : seq) key = key * (order.size() + 1) + pos[x];
          if (!best || key < best_key) {
            best = PatternVerdict{kind, seq};
            best_key = key;
          }
        });
      });
    }
  return best ? *best : PatternVerdict{};
}

/// Perfect order from a strongly consistent precedence layout with at most
/// two classes: the first class in reverse, then the second class.
inline std::vector<Vertex> build_perfect_order(const Graph& g, const Layout& layout) {
  validate(g, layout);
  if (layout.classes.size() > 2 || !is_precedence(layout) || !is_strongly_consistent(g, layout))
    throw std::invalid_argument("build_perfect_order: layout is not a precedence proper 2-thin certificate");
  const auto& first = layout.classes.front();
  std::vector<Vertex> out;
  std::size_t split = first.size();
  out.assign(layout.order.begin(), layout.order.begin() + static_cast<std::ptrdiff_t>(split));
  std::reverse(out.begin(), out.end());
  out.insert(out.end(), layout.order.begin() + static_cast<std::ptrdiff_t>(split), layout.order.end());
  return out;
}

/// Greedy coloring along `order`; colors are 1-based.
inline std::vector<std::size_t> greedy_color(const Graph& g, std::span<const Vertex> order) {
  detail::positions(g, order);
  std::vector<std::size_t> color(g.size(), 0);
  std::vector<char> taken(g.size() + 2, 0);
  for (Vertex v : order) {
    std::fill(taken.begin(), taken.end(), 0);
    g.neighbors(v).for_each([&](Vertex w) {
      if (color[w] != 0) taken[color[w]] = 1;
    });
    std::size_t c = 1;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

inline std::size_t colors_used(const std::vector<std::size_t>& coloring) {
  return coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end());
}

inline bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& coloring) {
  if (coloring.size() != g.size()) return false;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return true;
}

/// A proper interval graph with a proper interval order and color bounds.
/// Bounds above n are clamped to n.
class MuInstance {
 public:
  MuInstance(Graph graph, std::vector<Vertex> order, std::vector<std::size_t> mu)
      : graph_(std::move(graph)), order_(std::move(order)), mu_(std::move(mu)) {
    const std::size_t n = graph_.size();
    if (n == 0) throw std::invalid_argument("mu instance: graph is empty");
    if (mu_.size() != n) throw std::invalid_argument("mu instance: mu has " + std::to_string(mu_.size()) +
                                                     " entries, graph has " + std::to_string(n));
    const auto verdict = verify_proper_interval_order(graph_, order_);
    if (!verdict) throw std::invalid_argument("mu instance: order is not a proper interval order");
    for (auto& m : mu_) {
      if (m == 0) throw std::invalid_argument("mu instance: bounds must be positive");
      m = std::min(m, n);
    }
  }

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& order() const { return order_; }
  const std::vector<std::size_t>& mu() const { return mu_; }
  std::size_t size() const { return graph_.size(); }

 private:
  Graph graph_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> mu_;
};

struct Reduction {
  Graph graph;
  Layout layout;
};

/// G' = G plus a clique w_1..w_n (ids n..2n-1) with v ~ w_i iff mu(v) < i.
/// Layout: w_1..w_n, then the instance order; classes {A, V(G)}.
inline Reduction reduce_gprime(const MuInstance& inst) {
  const std::size_t n = inst.size();
  GraphBuilder b(2 * n);
  for (auto [u, v] : inst.graph().edges()) b.add_edge(u, v);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vertex w = n + i - 1;
    for (std::size_t j = i + 1; j <= n; ++j) b.add_edge(w, n + j - 1);
    for (Vertex v = 0; v < n; ++v)
      if (inst.mu()[v] < i) b.add_edge(v, w);
  }
  std::vector<Vertex> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = n + i;
  return {std::move(b).build(), layout_from_sequence({a, inst.order()})};
}

/// G'' = G plus w^i_j (id n + (i-1)n + (j-1)) where B is the proper
/// interval graph whose maximal cliques are every n consecutive vertices of
/// w^1_1..w^1_n, w^2_1, ..., and v_k ~ w^k_j iff mu(v_k) < j, v_k being the
/// k-th vertex of the instance order. Layout: w^1_*, v_1, w^2_*, v_2, ...
/// with classes {V(G), B}.
inline Reduction reduce_gdoubleprime(const MuInstance& inst) {
  const std::size_t n = inst.size();
  auto w = [n](std::size_t i, std::size_t j) { return n + (i - 1) * n + (j - 1); };
  GraphBuilder b(n + n * n);
  for (auto [u, v] : inst.graph().edges()) b.add_edge(u, v);
  for (std::size_t p = 0; p < n * n; ++p)
    for (std::size_t q = p + 1; q < n * n && q < p + n; ++q) b.add_edge(n + p, n + q);
  for (std::size_t k = 1; k <= n; ++k) {
    const Vertex v = inst.order()[k - 1];
    for (std::size_t j = 1; j <= n; ++j)
      if (inst.mu()[v] < j) b.add_edge(v, w(k, j));
  }
  Graph g = std::move(b).build();

  std::vector<Vertex> gadget(n * n);
  for (std::size_t p = 0; p < n * n; ++p) gadget[p] = n + p;
  const auto sub = induced_subgraph(g, gadget);
  std::vector<Vertex> local(n * n);
  for (std::size_t p = 0; p < n * n; ++p) local[p] = p;
  if (!verify_proper_interval_order(sub.graph, local))
    throw std::logic_error("reduce_gdoubleprime: gadget order is not proper interval");

  Layout layout;
  layout.classes.resize(2);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j <= n; ++j) {
      layout.order.push_back(w(k, j));
      layout.classes[1].push_back(w(k, j));
    }
    layout.order.push_back(inst.order()[k - 1]);
    layout.classes[0].push_back(inst.order()[k - 1]);
  }
  return {std::move(g), std::move(layout)};
}

}  // namespace thinness::coloring
