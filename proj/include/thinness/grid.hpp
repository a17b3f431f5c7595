#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "thinness/graph.hpp"
#include "thinness/layout.hpp"

namespace thinness::grid_family {

struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

inline constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Bounds on thin(GR_{n,m}); the arguments are swapped so that n <= m.
inline Bounds thin_bounds(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("thin_bounds: dimensions must be positive");
  if (n > m) std::swap(n, m);
  return {std::max<std::size_t>(1, ceil_div(n - 1, 3)), ceil_div(n + 1, 2)};
}

inline std::size_t fp_gr2_value(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fp_gr2_value: n must be positive");
  return ceil_div(n + 1, 2);
}

/// Bounds on fp(GR_n).
inline Bounds fp_grn_bounds(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fp_grn_bounds: n must be positive");
  const std::size_t half = ceil_div(n - 1, 2);
  return {std::max<std::size_t>(1, ceil_div(n - 1, 3) * half + 1), half * half + 1};
}

namespace detail {

/// Canonical (interval) order of G[S] when G[S] is a disjoint union of
/// caterpillars: per component, walk the spine from one end emitting each
/// spine vertex after its leaves.
inline std::vector<Vertex> caterpillar_order(const Graph& g, std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  VertexSet in(g.size());
  for (Vertex v : members) in.insert(v);
  auto inner_neighbors = [&](Vertex v) {
    VertexSet s = g.neighbors(v);
    s &= in;
    return s.to_vector();
  };
  std::vector<std::size_t> deg(g.size(), 0);
  for (Vertex v : members) deg[v] = inner_neighbors(v).size();

  std::vector<char> done(g.size(), 0);
  std::vector<Vertex> out;
  for (Vertex start : members) {
    if (done[start]) continue;
    // collect the component
    std::vector<Vertex> comp{start};
    done[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : inner_neighbors(comp[i]))
        if (!done[w]) {
          done[w] = 1;
          comp.push_back(w);
        }
    std::vector<Vertex> spine;
    for (Vertex v : comp)
      if (deg[v] >= 2) spine.push_back(v);
    if (spine.empty()) {
      // K1 or K2
      std::sort(comp.begin(), comp.end());
      out.insert(out.end(), comp.begin(), comp.end());
      continue;
    }
    auto is_spine = [&](Vertex v) { return deg[v] >= 2; };
    Vertex cur = *std::min_element(spine.begin(), spine.end(), [&](Vertex a, Vertex b) {
      auto ends = [&](Vertex v) {
        std::size_t c = 0;
        for (Vertex w : inner_neighbors(v)) c += is_spine(w) ? 1 : 0;
        return c;
      };
      return std::make_pair(ends(a), a) < std::make_pair(ends(b), b);
    });
    std::vector<char> walked(g.size(), 0);
    std::size_t visited = 0;
    while (true) {
      walked[cur] = 1;
      ++visited;
      std::vector<Vertex> leaves;
      Vertex next = cur;
      std::size_t forward = 0;
      for (Vertex w : inner_neighbors(cur)) {
        if (!is_spine(w)) {
          leaves.push_back(w);
        } else if (!walked[w]) {
          next = w;
          ++forward;
        }
      }
      if (forward > 1) throw std::logic_error("caterpillar_order: spine is not a path");
      out.insert(out.end(), leaves.begin(), leaves.end());
      out.push_back(cur);
      if (forward == 0) break;
      cur = next;
    }
    if (visited != spine.size()) throw std::logic_error("caterpillar_order: spine is not a path");
  }
  return out;
}

/// Maps a layout on GR_{m,n} to GR_{n,m} by transposing coordinates.
inline Layout transpose(const Layout& layout, std::size_t rows, std::size_t cols) {
  // layout is over grid(rows, cols); output is over grid(cols, rows)
  const GridLabeling src{rows, cols};
  const GridLabeling dst{cols, rows};
  auto map = [&](Vertex v) {
    auto [i, j] = src.coord(v);
    return dst.at(j, i);
  };
  Layout out;
  for (Vertex v : layout.order) out.order.push_back(map(v));
  for (const auto& c : layout.classes) {
    std::vector<Vertex> cc;
    for (Vertex v : c) cc.push_back(map(v));
    out.classes.push_back(std::move(cc));
  }
  return out;
}

/// 1-based class of row i, column j in the thin layout of a grid with n rows.
inline std::size_t thin_class(std::size_t i, std::size_t j) {
  if (i == 1) return 1;
  if (i % 2 == 1) return (i + 1) / 2;
  const std::size_t c = i / 2;
  return j % 2 == c % 2 ? c : c + 1;
}

inline Layout thin_layout_rows_le_cols(std::size_t n, std::size_t m) {
  const GridLabeling lab{n, m};
  const std::size_t k = ceil_div(n + 1, 2);
  const std::size_t total = n * m;
  std::vector<std::size_t> cls(total);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j) cls[lab.at(i, j)] = thin_class(i, j);

  // Each class has a canonical internal order; consecutive classes are
  // merged by a fixed periodic pattern. The total order is a topological
  // order of the union of all these chains.
  std::vector<std::vector<Vertex>> succ(total);
  std::vector<std::size_t> indeg(total, 0);
  auto chain = [&](const std::vector<std::tuple<long, long, std::size_t>>& seq) {
    Vertex prev = total;
    for (auto [i, j, want] : seq) {
      if (!lab.contains(i, j)) continue;
      const Vertex v = lab.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (cls[v] != want) continue;
      if (prev != total && std::find(succ[prev].begin(), succ[prev].end(), v) == succ[prev].end()) {
        succ[prev].push_back(v);
        ++indeg[v];
      }
      prev = v;
    }
  };
  for (std::size_t c = 1; c <= k; ++c) {
    std::vector<std::tuple<long, long, std::size_t>> seq;
    const long top = static_cast<long>(2 * c), mid = top - 1, bottom = top - 2;
    for (long j = 1; j <= static_cast<long>(m); ++j)
      for (long r : {top, bottom, mid}) seq.emplace_back(r, j, c);
    chain(seq);
  }
  for (std::size_t c = 1; c < k; ++c) {
    const long i = static_cast<long>(c);
    std::vector<std::tuple<long, long, std::size_t>> seq;
    for (long j = -2; j <= static_cast<long>(m) + 2; ++j) {
      if (((j % 2) + 2) % 2 != (i + 1) % 2) continue;
      const std::size_t lo = c, hi = c + 1;
      seq.emplace_back(2 * i + 2, j, hi);
      seq.emplace_back(2 * i, j, hi);
      seq.emplace_back(2 * i - 2, j - 1, lo);
      seq.emplace_back(2 * i - 1, j - 1, lo);
      seq.emplace_back(2 * i - 1, j, lo);
      seq.emplace_back(2 * i, j + 1, lo);
      seq.emplace_back(2 * i + 1, j, hi);
      seq.emplace_back(2 * i + 1, j + 1, hi);
    }
    chain(seq);
  }

  using Key = std::tuple<std::size_t, std::size_t, std::size_t, Vertex>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  auto key = [&](Vertex v) {
    auto [i, j] = lab.coord(v);
    return Key{cls[v], j, i, v};
  };
  for (Vertex v = 0; v < total; ++v)
    if (indeg[v] == 0) ready.push(key(v));
  Layout out;
  out.classes.resize(k);
  while (!ready.empty()) {
    const Vertex v = std::get<3>(ready.top());
    ready.pop();
    out.order.push_back(v);
    out.classes[cls[v] - 1].push_back(v);
    for (Vertex w : succ[v])
      if (--indeg[w] == 0) ready.push(key(w));
  }
  if (out.order.size() != total) throw std::logic_error("thin_layout: merge constraints are cyclic");
  return out;
}

}  // namespace detail

/// Consistent layout of GR_{n,m} with ceil((min(n,m)+1)/2) classes. Vertex
/// ids follow grid(n, m).
inline Layout thin_layout(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("thin_layout: dimensions must be positive");
  if (n <= m) return detail::thin_layout_rows_le_cols(n, m);
  return detail::transpose(detail::thin_layout_rows_le_cols(m, n), m, n);
}

/// Precedence layout of GR_{2,n} (vertex ids of grid(2, n)): floor(n/2)
/// singletons at even columns, alternating rows 1,2,1,..., then the
/// remaining induced path in canonical order.
inline Layout fp_gr2_layout(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fp_gr2_layout: n must be positive");
  const auto gg = grid(2, n);
  std::vector<std::vector<Vertex>> seq;
  std::vector<char> used(2 * n, 0);
  for (std::size_t j = 2, k = 1; j <= n; j += 2, ++k) {
    const Vertex v = gg.labeling.at(k % 2 == 1 ? 1 : 2, j);
    used[v] = 1;
    seq.push_back({v});
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < 2 * n; ++v)
    if (!used[v]) rest.push_back(v);
  seq.push_back(detail::caterpillar_order(gg.graph, rest));
  return layout_from_sequence(std::move(seq));
}

/// Precedence layout of GR_n with ceil((n-1)/2)^2 + 1 classes: one class
/// per claw {below, left, centre, upper-right diagonal} around centres at
/// even offsets from the bottom-left corner, claws listed bottom to top and
/// left to right, then the caterpillar of what remains.
inline Layout fp_grn_layout(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fp_grn_layout: n must be positive");
  const auto gg = grid(n, n);
  const auto& lab = gg.labeling;
  const long side = static_cast<long>(n);
  const long claws_per_axis = static_cast<long>(ceil_div(n - 1, 2));
  std::vector<char> used(n * n, 0);
  std::vector<std::vector<Vertex>> seq;
  // coordinates (x, y) are 0-based column/row from the bottom-left
  auto at = [&](long x, long y) { return lab.at(static_cast<std::size_t>(y + 1), static_cast<std::size_t>(x + 1)); };
  for (long t = 0; t < claws_per_axis; ++t)
    for (long s = 0; s < claws_per_axis; ++s) {
      const long x = 2 * s, y = 2 * t;
      std::vector<Vertex> claw;
      for (auto [cx, cy] : {std::pair{x, y - 1}, std::pair{x - 1, y}, std::pair{x, y},
                            std::pair{x + 1, y + 1}})
        if (cx >= 0 && cy >= 0 && cx < side && cy < side) {
          const Vertex v = at(cx, cy);
          used[v] = 1;
          claw.push_back(v);
        }
      seq.push_back(std::move(claw));
    }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n * n; ++v)
    if (!used[v]) rest.push_back(v);
  seq.push_back(detail::caterpillar_order(gg.graph, rest));
  return layout_from_sequence(std::move(seq));
}

}  // namespace thinness::grid_family
