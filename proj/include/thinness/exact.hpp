#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "thinness/graph.hpp"
#include "thinness/layout.hpp"

namespace thinness::exact {

using Mask = std::uint64_t;

inline constexpr std::size_t max_vertices = 64;

namespace detail {

inline constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

inline void require_small(const Graph& g, const char* who) {
  if (g.size() > max_vertices)
    throw std::invalid_argument(std::string(who) + ": at most 64 vertices supported");
}

inline std::vector<Mask> masks(const Graph& g) {
  std::vector<Mask> adj(g.size());
  for (Vertex v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v).word0();
  return adj;
}

inline int popcount(Mask m) { return std::popcount(m); }
inline std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

/// Size of a maximum clique inside `cand`; returns `floor` when none is
/// larger.
inline int max_clique(const Mask* adj, Mask cand, int size, int floor) {
  if (cand == 0) return std::max(size, floor);
  while (cand != 0) {
    if (size + popcount(cand) <= floor) return floor;
    const std::size_t v = lowest(cand);
    cand &= cand - 1;
    floor = max_clique(adj, cand & adj[v], size + 1, floor);
  }
  return floor;
}

/// DSATUR branch and bound over a graph given by adjacency masks.
class Colorer {
 public:
  Colorer(const Mask* adj, std::size_t n) : adj_(adj), n_(n), color_(n, -1), best_color_(n, -1) {}

  /// Optimal coloring using at most `limit` colors, or nullopt when none
  /// exists. Colors are 0-based.
  std::optional<std::vector<int>> solve(int limit) {
    if (n_ == 0) return std::vector<int>{};
    best_ = limit + 1;
    found_ = false;
    Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    clique_ = max_clique(adj_, all, 0, 0);
    if (clique_ > limit) return std::nullopt;
    classes_.assign(n_, 0);
    search(all, 0);
    if (!found_) return std::nullopt;
    return best_color_;
  }

 private:
  void search(Mask uncolored, int used) {
    if (uncolored == 0) {
      best_ = used;
      best_color_ = color_;
      found_ = true;
      return;
    }
    std::size_t pick = n_;
    int pick_sat = -1, pick_deg = -1;
    for (Mask m = uncolored; m != 0; m &= m - 1) {
      const std::size_t v = lowest(m);
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (classes_[c] & adj_[v]) != 0;
      const int deg = popcount(adj_[v] & uncolored);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const Mask rest = uncolored & ~bit(pick);
    for (int c = 0; c < used; ++c) {
      if ((classes_[c] & adj_[pick]) != 0) continue;
      assign(pick, c);
      search(rest, used);
      unassign(pick, c);
      if (best_ <= clique_) return;
    }
    if (used + 1 < best_) {
      assign(pick, used);
      search(rest, used + 1);
      unassign(pick, used);
    }
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    classes_[c] |= bit(v);
  }
  void unassign(std::size_t v, int c) {
    color_[v] = -1;
    classes_[c] &= ~bit(v);
  }

  const Mask* adj_;
  std::size_t n_;
  std::vector<int> color_, best_color_;
  std::vector<Mask> classes_;
  int best_ = 0;
  int clique_ = 0;
  bool found_ = false;
};

struct Rules {
  bool strong = false;
  bool independent = false;
  bool complete = false;
};

inline Rules rules_of(const VariantSpec& spec) {
  return {spec.consistency == Consistency::strong,
          spec.class_constraint == ClassConstraint::independent,
          spec.class_constraint == ClassConstraint::complete};
}

/// Whether u (earlier) and v (later) may not share a class. `after_v` holds
/// the vertices placed after v, `before_u` those placed before u.
inline bool conflicts(const Mask* adj, const Rules& r, std::size_t u, std::size_t v, Mask after_v,
                      Mask before_u) {
  if ((adj[u] & ~adj[v] & after_v) != 0) return true;
  if (r.strong && (adj[v] & ~adj[u] & before_u) != 0) return true;
  const bool edge = (adj[u] & bit(v)) != 0;
  return (r.independent && edge) || (r.complete && !edge);
}

inline std::vector<Mask> conflict_masks(const Graph& g, std::span<const Vertex> order,
                                        const VariantSpec& spec) {
  const std::size_t n = g.size();
  const auto adj = masks(g);
  const Rules r = rules_of(spec);
  std::vector<Mask> prefix(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) prefix[p + 1] = prefix[p] | bit(order[p]);
  const Mask all = prefix[n];
  std::vector<Mask> conf(n, 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < q; ++p) {
      const std::size_t u = order[p], v = order[q];
      if (conflicts(adj.data(), r, u, v, all & ~prefix[q + 1], prefix[p])) {
        conf[u] |= bit(v);
        conf[v] |= bit(u);
      }
    }
  return conf;
}

inline void check_order(const Graph& g, std::span<const Vertex> order) {
  Layout probe{std::vector<Vertex>(order.begin(), order.end()), {}};
  if (!order.empty()) probe.classes.push_back(probe.order);
  validate(g, probe);
}

}  // namespace detail

/// Graph on V(G) whose edges are the pairs that cannot share a class under
/// `order`. Only defined for non-precedence specs.
inline Graph conflict_graph(const Graph& g, std::span<const Vertex> order, const VariantSpec& spec) {
  if (spec.precedence) throw std::invalid_argument("conflict_graph: precedence specs are not supported");
  detail::require_small(g, "conflict_graph");
  detail::check_order(g, order);
  const auto conf = detail::conflict_masks(g, order, spec);
  GraphBuilder b(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Mask m = conf[u]; m != 0; m &= m - 1)
      if (u < detail::lowest(m)) b.add_edge(u, detail::lowest(m));
  return std::move(b).build();
}

/// Fewest classes for a fixed order, with an optimal layout.
inline Layout min_classes_for_order(const Graph& g, std::span<const Vertex> order,
                                    const VariantSpec& spec) {
  detail::require_small(g, "min_classes_for_order");
  detail::check_order(g, order);
  const std::size_t n = g.size();
  const auto conf = detail::conflict_masks(g, order, spec);
  Layout out;
  out.order.assign(order.begin(), order.end());
  if (spec.precedence) {
    Mask current = 0;
    for (Vertex v : order) {
      if (out.classes.empty() || (conf[v] & current) != 0) {
        out.classes.emplace_back();
        current = 0;
      }
      out.classes.back().push_back(v);
      current |= detail::bit(v);
    }
    return out;
  }
  detail::Colorer colorer(conf.data(), n);
  const auto coloring = colorer.solve(static_cast<int>(n));
  // classes numbered by first appearance along the order
  std::vector<int> rename(n, -1);
  for (Vertex v : order) {
    const int c = (*coloring)[v];
    if (rename[c] < 0) {
      rename[c] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[rename[c]].push_back(v);
  }
  return out;
}

/// Optimal proper coloring, colors 1..chi.
inline std::vector<std::size_t> optimal_coloring(const Graph& g) {
  detail::require_small(g, "optimal_coloring");
  const auto adj = detail::masks(g);
  detail::Colorer colorer(adj.data(), g.size());
  const auto c = colorer.solve(static_cast<int>(g.size()));
  std::vector<std::size_t> out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) out[v] = static_cast<std::size_t>((*c)[v]) + 1;
  return out;
}

inline std::size_t chromatic_number(const Graph& g) {
  const auto c = optimal_coloring(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

inline bool is_k_colorable(const Graph& g, std::size_t k) {
  detail::require_small(g, "is_k_colorable");
  const auto adj = detail::masks(g);
  detail::Colorer colorer(adj.data(), g.size());
  return colorer.solve(static_cast<int>(std::min(k, g.size()))).has_value();
}

namespace detail {

inline bool mu_search(const Graph& g, const std::vector<std::size_t>& mu,
                      const std::vector<Vertex>& seq, std::size_t at, std::vector<std::size_t>& color) {
  if (at == seq.size()) return true;
  const Vertex v = seq[at];
  for (std::size_t c = 1; c <= mu[v]; ++c) {
    bool free = true;
    g.neighbors(v).for_each([&](Vertex w) { free = free && color[w] != c; });
    if (!free) continue;
    color[v] = c;
    if (mu_search(g, mu, seq, at + 1, color)) return true;
    color[v] = 0;
  }
  return false;
}

}  // namespace detail

/// Whether G has a proper coloring f with 1 <= f(v) <= mu[v].
inline bool is_mu_colorable(const Graph& g, const std::vector<std::size_t>& mu) {
  if (mu.size() != g.size()) throw std::invalid_argument("is_mu_colorable: mu size mismatch");
  std::vector<Vertex> seq(g.size());
  for (Vertex v = 0; v < g.size(); ++v) seq[v] = v;
  // most constrained first
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return mu[a] < mu[b]; });
  std::vector<std::size_t> color(g.size(), 0);
  return detail::mu_search(g, mu, seq, 0, color);
}

struct Options {
  /// Wall-clock budget; unlimited when empty.
  std::optional<std::chrono::milliseconds> budget;
  unsigned jobs = 1;
};

struct Result {
  /// False when the budget ran out; value and layout are then the best
  /// incumbent, an upper bound only.
  bool conclusive = true;
  std::size_t value = 0;
  Layout layout;
};

namespace detail {

struct Shared {
  std::atomic<std::size_t> best;
  /// Smallest first vertex of an order known to reach the lower bound.
  std::atomic<std::size_t> lb_first;
  std::atomic<bool> timed_out{false};
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class Worker {
 public:
  Worker(const std::vector<Mask>& adj, const VariantSpec& spec, std::size_t lower_bound, Shared& shared)
      : adj_(adj),
        n_(adj.size()),
        rules_(rules_of(spec)),
        precedence_(spec.precedence),
        lower_bound_(lower_bound),
        shared_(shared),
        order_(n_),
        before_(n_, 0),
        conf_(n_, 0),
        own_best_(n_) {}

  void run(std::size_t first) {
    if (first > shared_.lb_first.load()) return;
    if (own_best_ <= lower_bound_) return;
    place(0, first, all() & ~bit(first), 0, 0, 0);
  }

  std::size_t best() const { return own_best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  bool stop() {
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    if (shared_.deadline && (++nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.timed_out.store(true);
      return true;
    }
    return order_[0] > shared_.lb_first.load(std::memory_order_relaxed);
  }

  /// Places v at position depth; `bound` is the clique number of the
  /// partial conflict graph (non-precedence) or the number of segments so
  /// far (precedence), `segment` the vertices of the open segment.
  void place(std::size_t depth, std::size_t v, Mask remaining, Mask placed, int bound, Mask segment) {
    order_[depth] = v;
    before_[v] = placed;
    // Strong specs are closed under reversal, so only orders whose first
    // vertex is smaller than their last one are searched.
    if (rules_.strong && n_ >= 2) {
      const Mask above = order_[0] >= 63 ? 0 : ~(bit(order_[0] + 1) - 1);
      if (remaining != 0 ? (remaining & above) == 0 : v < order_[0]) return;
    }

    Mask conf_v = 0;
    for (Mask m = placed; m != 0; m &= m - 1) {
      const std::size_t u = lowest(m);
      if (conflicts(adj_.data(), rules_, u, v, remaining, before_[u])) conf_v |= bit(u);
    }
    int next_bound = bound;
    Mask next_segment = segment;
    if (precedence_) {
      if (depth == 0 || (conf_v & segment) != 0) {
        ++next_bound;
        next_segment = bit(v);
      } else {
        next_segment |= bit(v);
      }
    } else if (conf_v == 0) {
      next_bound = std::max(next_bound, 1);
    } else {
      for (Mask m = conf_v; m != 0; m &= m - 1) conf_[lowest(m)] |= bit(v);
      conf_[v] = conf_v;
      next_bound = std::max(next_bound, 1 + max_clique(conf_.data(), conf_v, 0, next_bound - 1));
    }
    if (!prunes(next_bound) && !stop()) {
      if (remaining == 0) {
        leaf(next_bound);
      } else {
        const Mask now = placed | bit(v);
        for (Mask m = remaining; m != 0; m &= m - 1) {
          place(depth + 1, lowest(m), remaining & ~bit(lowest(m)), now, next_bound, next_segment);
          if (own_best_ <= lower_bound_ || stop()) break;
        }
      }
    }
    if (!precedence_ && conf_v != 0) {
      for (Mask m = conf_v; m != 0; m &= m - 1) conf_[lowest(m)] &= ~bit(v);
      conf_[v] = 0;
    }
  }

  bool prunes(int bound) const {
    const auto b = static_cast<std::size_t>(bound);
    return b >= own_best_ || b > shared_.best.load(std::memory_order_relaxed);
  }

  void leaf(int bound) {
    std::size_t value = static_cast<std::size_t>(bound);
    if (!precedence_) {
      const std::size_t limit = std::min(own_best_ - 1, shared_.best.load());
      if (limit < static_cast<std::size_t>(std::max(bound, 1))) return;
      Colorer colorer(conf_.data(), n_);
      const auto coloring = colorer.solve(static_cast<int>(limit));
      if (!coloring) return;
      int used = 0;
      for (int c : *coloring) used = std::max(used, c + 1);
      value = static_cast<std::size_t>(used);
    }
    own_best_ = value;
    best_order_ = order_;
    std::size_t seen = shared_.best.load();
    while (value < seen && !shared_.best.compare_exchange_weak(seen, value)) {
    }
    if (value <= lower_bound_) {
      std::size_t first = shared_.lb_first.load();
      while (order_[0] < first && !shared_.lb_first.compare_exchange_weak(first, order_[0])) {
      }
    }
  }

  const std::vector<Mask>& adj_;
  std::size_t n_;
  Rules rules_;
  bool precedence_;
  std::size_t lower_bound_;
  Shared& shared_;
  std::vector<Vertex> order_;
  std::vector<Mask> before_;
  std::vector<Mask> conf_;
  std::size_t own_best_;
  std::vector<Vertex> best_order_;
  std::uint64_t nodes_ = 0;
};

inline std::size_t lower_bound_for(const Graph& g, const VariantSpec& spec) {
  if (g.size() == 0) return 0;
  switch (spec.class_constraint) {
    case ClassConstraint::independent: return chromatic_number(g);
    case ClassConstraint::complete: return chromatic_number(complement(g));
    case ClassConstraint::any: return 1;
  }
  return 1;
}

}  // namespace detail

/// Minimum class count over all vertex orders for `spec`, with the
/// lexicographically smallest optimal order. The result does not depend on
/// options.jobs.
inline Result exact_value(const Graph& g, const VariantSpec& spec, const Options& options = {}) {
  detail::require_small(g, "exact_value");
  const std::size_t n = g.size();
  if (n == 0) return {};

  std::vector<Vertex> identity(n);
  for (Vertex v = 0; v < n; ++v) identity[v] = v;
  // every vertex alone is always valid
  std::size_t best = n;
  std::vector<Vertex> best_order = identity;

  const std::size_t lower = detail::lower_bound_for(g, spec);
  const auto adj = detail::masks(g);
  detail::Shared shared;
  shared.best = n;
  shared.lb_first = lower >= n ? 0 : n;
  if (options.budget) shared.deadline = std::chrono::steady_clock::now() + *options.budget;

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(n)));
  std::vector<std::optional<std::pair<std::size_t, std::vector<Vertex>>>> found(jobs);
  auto work = [&](unsigned id) {
    detail::Worker w(adj, spec, lower, shared);
    for (std::size_t first = id; first < n; first += jobs) {
      w.run(first);
      if (shared.timed_out.load()) break;
    }
    if (!w.best_order().empty()) found[id].emplace(w.best(), w.best_order());
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  for (const auto& candidate : found)
    if (candidate && std::tie(candidate->first, candidate->second) < std::tie(best, best_order)) {
      best = candidate->first;
      best_order = candidate->second;
    }

  Result out;
  out.conclusive = !shared.timed_out.load();
  out.layout = min_classes_for_order(g, best_order, spec);
  out.value = width(out.layout);
  if (out.value != best) throw std::logic_error("exact_value: witness width disagrees with search");
  return out;
}

}  // namespace thinness::exact
