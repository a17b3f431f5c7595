#pragma once

// Test-only oracles and generators. They rely on the library only for the
// Graph/Layout containers, never on its checkers.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "thinness/thinness.hpp"

namespace thinness::oracle {

/// Direct triple enumeration from the definition. When `reversed`, the
/// order is read backwards.
inline bool naive_consistent(const Graph& g, const Layout& l, bool reversed = false) {
  std::vector<Vertex> order = l.order;
  if (reversed) std::reverse(order.begin(), order.end());
  std::vector<std::size_t> cls(g.size());
  for (std::size_t c = 0; c < l.classes.size(); ++c)
    for (Vertex v : l.classes[c]) cls[v] = c;
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const Vertex r = order[a], s = order[b], t = order[c];
        if (cls[r] == cls[s] && g.adjacent(r, t) && !g.adjacent(s, t)) return false;
      }
  return true;
}

inline bool naive_verify(const Graph& g, const Layout& l, const VariantSpec& spec) {
  if (!naive_consistent(g, l)) return false;
  if (spec.consistency == Consistency::strong && !naive_consistent(g, l, true)) return false;
  std::vector<std::size_t> pos(g.size());
  for (std::size_t p = 0; p < l.order.size(); ++p) pos[l.order[p]] = p;
  if (spec.precedence) {
    std::size_t next = 0;
    for (const auto& c : l.classes) {
      std::vector<std::size_t> ps;
      for (Vertex v : c) ps.push_back(pos[v]);
      std::sort(ps.begin(), ps.end());
      for (std::size_t p : ps)
        if (p != next++) return false;
    }
  }
  for (const auto& c : l.classes)
    for (Vertex u : c)
      for (Vertex v : c) {
        if (u == v) continue;
        if (spec.class_constraint == ClassConstraint::independent && g.adjacent(u, v)) return false;
        if (spec.class_constraint == ClassConstraint::complete && !g.adjacent(u, v)) return false;
      }
  return true;
}

/// Calls fn(labels, k) for every set partition of {0..n-1} as a restricted
/// growth string.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&, std::size_t)>& fn) {
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      fn(label, used);
      return;
    }
    for (std::size_t c = 0; c <= used; ++c) {
      label[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) {
    fn(label, 0);
    return;
  }
  rec(0, 0);
}

/// Minimum width over every (order, partition) pair, checked naively.
/// For precedence specs classes are listed by first position.
inline std::size_t brute_force_value(const Graph& g, const VariantSpec& spec) {
  const std::size_t n = g.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = n;
  do {
    for_each_partition(n, [&](const std::vector<std::size_t>& label, std::size_t k) {
      if (k >= best) return;
      Layout l;
      l.order = order;
      l.classes.assign(k, {});
      for (std::size_t p = 0; p < n; ++p) l.classes[label[p]].push_back(order[p]);
      if (naive_verify(g, l, spec)) best = k;
    });
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

template <typename Rng>
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random order plus a random partition into at most k non-empty classes.
template <typename Rng>
Layout random_layout(std::size_t n, std::size_t k, Rng& rng) {
  Layout l;
  l.order = random_permutation(n, rng);
  std::uniform_int_distribution<std::size_t> pick(0, std::max<std::size_t>(k, 1) - 1);
  std::vector<std::vector<Vertex>> classes(std::max<std::size_t>(k, 1));
  for (Vertex v : l.order) classes[pick(rng)].push_back(v);
  for (auto& c : classes)
    if (!c.empty()) l.classes.push_back(std::move(c));
  return l;
}

template <typename Rng>
Graph random_graph_n(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> p(0.15, 0.85);
  return random_graph(n, p(rng), rng);
}

/// Calls fn on every labelled graph with n vertices.
inline void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    fn(Graph(n, edges));
  }
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(p[u], p[v])) {
        same = false;
        break;
      }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

template <typename Rng>
cograph::CotreeExpr random_cotree(std::size_t leaves, Rng& rng) {
  using cograph::CotreeExpr;
  if (leaves <= 1) return CotreeExpr::leaf();
  std::uniform_int_distribution<std::size_t> parts_d(2, std::min<std::size_t>(leaves, 3));
  const std::size_t parts = parts_d(rng);
  // random composition of `leaves` into `parts` positive parts
  std::vector<std::size_t> cuts;
  std::vector<std::size_t> slots(leaves - 1);
  std::iota(slots.begin(), slots.end(), 1);
  std::shuffle(slots.begin(), slots.end(), rng);
  cuts.assign(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(leaves);
  std::bernoulli_distribution coin(0.5);
  const auto kind = coin(rng) ? CotreeExpr::Kind::disjoint_union : CotreeExpr::Kind::join;
  std::vector<CotreeExpr> children;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    CotreeExpr child = random_cotree(c - prev, rng);
    if (child.kind == kind) {
      for (auto& gc : child.children) children.push_back(std::move(gc));
    } else {
      children.push_back(std::move(child));
    }
    prev = c;
  }
  return CotreeExpr::make(kind, std::move(children));
}

/// Proper interval graph on n vertices together with a proper interval
/// order. Vertex ids are shuffled unless `identity_ids`.
struct OrderedGraph {
  Graph graph;
  std::vector<Vertex> order;
};

template <typename Rng>
OrderedGraph random_proper_interval(std::size_t n, Rng& rng, bool identity_ids = false) {
  // position i is adjacent to positions i+1..reach[i], reach non-decreasing
  std::vector<std::size_t> reach(n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    r = std::max(r, i);
    std::uniform_int_distribution<std::size_t> step(0, 2);
    r = std::min(n - 1, r + step(rng));
    reach[i] = r;
  }
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (!identity_ids) std::shuffle(id.begin(), id.end(), rng);
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= reach[i]; ++j) b.add_edge(id[i], id[j]);
  return {std::move(b).build(), id};
}

/// Two proper interval graphs glued by a staircase of cross edges: the
/// result is precedence proper 2-thin with the returned certificate.
struct Certified {
  Graph graph;
  Layout layout;
};

template <typename Rng>
Certified random_precedence_proper_2thin(std::size_t n1, std::size_t n2, Rng& rng) {
  auto a = random_proper_interval(n1, rng, true);
  auto b = random_proper_interval(n2, rng, true);
  GraphBuilder gb(n1 + n2);
  for (auto [u, v] : a.graph.edges()) gb.add_edge(u, v);
  for (auto [u, v] : b.graph.edges()) gb.add_edge(n1 + u, n1 + v);
  // x = distance from the end of the first part, edge iff y < h(x)
  std::uniform_int_distribution<std::size_t> h0(0, n2);
  std::size_t h = h0(rng);
  for (std::size_t x = 0; x < n1; ++x) {
    const Vertex u = n1 - 1 - x;
    for (std::size_t y = 0; y < h; ++y) gb.add_edge(u, n1 + y);
    std::uniform_int_distribution<std::size_t> drop(0, h);
    h -= drop(rng) / 2;
  }
  std::vector<Vertex> first(n1), second(n2);
  std::iota(first.begin(), first.end(), 0);
  std::iota(second.begin(), second.end(), n1);
  std::vector<std::vector<Vertex>> seq{first};
  if (n2 > 0) seq.push_back(second);
  return {std::move(gb).build(), layout_from_sequence(std::move(seq))};
}

}  // namespace thinness::oracle
