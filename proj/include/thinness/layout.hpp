#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thinness/graph.hpp"

namespace thinness {

/// A vertex ordering together with an ordered partition into classes.
/// `order` lists vertices from smallest to largest.
struct Layout {
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> classes;

  friend bool operator==(const Layout&, const Layout&) = default;
};

class MalformedLayout : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Variants

enum class Consistency { consistent, strong };
enum class ClassConstraint { any, independent, complete };

struct VariantSpec {
  Consistency consistency = Consistency::consistent;
  bool precedence = false;
  ClassConstraint class_constraint = ClassConstraint::any;

  friend bool operator==(const VariantSpec&, const VariantSpec&) = default;
};

namespace variants {
inline constexpr VariantSpec thin{Consistency::consistent, false, ClassConstraint::any};
inline constexpr VariantSpec pthin{Consistency::strong, false, ClassConstraint::any};
inline constexpr VariantSpec indthin{Consistency::consistent, false, ClassConstraint::independent};
inline constexpr VariantSpec indpthin{Consistency::strong, false, ClassConstraint::independent};
inline constexpr VariantSpec compthin{Consistency::consistent, false, ClassConstraint::complete};
inline constexpr VariantSpec comppthin{Consistency::strong, false, ClassConstraint::complete};
inline constexpr VariantSpec fp{Consistency::consistent, true, ClassConstraint::any};
inline constexpr VariantSpec fpp{Consistency::strong, true, ClassConstraint::any};
inline constexpr VariantSpec indfp{Consistency::consistent, true, ClassConstraint::independent};
inline constexpr VariantSpec indfpp{Consistency::strong, true, ClassConstraint::independent};
inline constexpr VariantSpec compfp{Consistency::consistent, true, ClassConstraint::complete};
inline constexpr VariantSpec compfpp{Consistency::strong, true, ClassConstraint::complete};

struct Named {
  std::string_view name;
  VariantSpec spec;
};

inline constexpr std::array<Named, 12> all{{
    {"thin", thin},
    {"pthin", pthin},
    {"indthin", indthin},
    {"indpthin", indpthin},
    {"compthin", compthin},
    {"comppthin", comppthin},
    {"fp", fp},
    {"fpp", fpp},
    {"indfp", indfp},
    {"indfpp", indfpp},
    {"compfp", compfp},
    {"compfpp", compfpp},
}};
}  // namespace variants

inline std::optional<VariantSpec> parse_variant(std::string_view name) {
  for (const auto& v : variants::all)
    if (v.name == name) return v.spec;
  return std::nullopt;
}

inline std::string_view variant_name(const VariantSpec& spec) {
  for (const auto& v : variants::all)
    if (v.spec == spec) return v.name;
  return "?";
}

/// True when every layout satisfying `stricter` also satisfies `looser`, so
/// the looser parameter is never larger.
inline bool relaxes(const VariantSpec& looser, const VariantSpec& stricter) {
  const bool consistency_ok = looser.consistency == Consistency::consistent ||
                              stricter.consistency == Consistency::strong;
  const bool precedence_ok = !looser.precedence || stricter.precedence;
  const bool class_ok = looser.class_constraint == ClassConstraint::any ||
                        looser.class_constraint == stricter.class_constraint;
  return consistency_ok && precedence_ok && class_ok;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class Direction { forward, reversed };

/// r < s < t in the order (or in the reversed order when `direction` is
/// reversed); r and s share a class, (r, t) is an edge, (s, t) is not.
struct BreakingTriple {
  Vertex r = 0;
  Vertex s = 0;
  Vertex t = 0;
  Direction direction = Direction::forward;

  friend bool operator==(const BreakingTriple&, const BreakingTriple&) = default;
};

enum class Violation {
  none,
  breaking_triple,
  neighborhood_not_consecutive,
  not_precedence,
  class_not_independent,
  class_not_complete,
};

inline std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::breaking_triple: return "breaking_triple";
    case Violation::neighborhood_not_consecutive: return "neighborhood_not_consecutive";
    case Violation::not_precedence: return "not_precedence";
    case Violation::class_not_independent: return "class_not_independent";
    case Violation::class_not_complete: return "class_not_complete";
  }
  return "?";
}

struct Verdict {
  Violation violation = Violation::none;
  std::optional<BreakingTriple> triple;
  /// Offending vertex pair for class-constraint and neighbourhood failures.
  std::optional<Edge> pair;
  std::optional<std::size_t> class_index;

  bool ok() const { return violation == Violation::none; }
  explicit operator bool() const { return ok(); }

  static Verdict pass() { return {}; }
  static Verdict broken(BreakingTriple t) { return {Violation::breaking_triple, t, {}, {}}; }
};

// ---------------------------------------------------------------------------
// Indexed view

/// Position and class lookup for a validated layout.
class IndexedLayout {
 public:
  IndexedLayout(std::size_t n, const Layout& layout) : layout_(&layout) {
    if (layout.order.size() != n)
      throw MalformedLayout("order has " + std::to_string(layout.order.size()) +
                            " vertices, graph has " + std::to_string(n));
    position_.assign(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      Vertex v = layout.order[p];
      if (v >= n) throw MalformedLayout("order contains out-of-range vertex " + std::to_string(v));
      if (position_[v] != n) throw MalformedLayout("order repeats vertex " + std::to_string(v));
      position_[v] = p;
    }
    class_of_.assign(n, layout.classes.size());
    for (std::size_t c = 0; c < layout.classes.size(); ++c) {
      if (layout.classes[c].empty()) throw MalformedLayout("class " + std::to_string(c) + " is empty");
      for (Vertex v : layout.classes[c]) {
        if (v >= n) throw MalformedLayout("class contains out-of-range vertex " + std::to_string(v));
        if (class_of_[v] != layout.classes.size())
          throw MalformedLayout("vertex " + std::to_string(v) + " appears in two classes");
        class_of_[v] = c;
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (class_of_[v] == layout.classes.size())
        throw MalformedLayout("vertex " + std::to_string(v) + " is in no class");
  }

  std::size_t size() const { return position_.size(); }
  std::size_t position(Vertex v) const { return position_[v]; }
  std::size_t class_of(Vertex v) const { return class_of_[v]; }
  std::size_t class_count() const { return layout_->classes.size(); }
  Vertex at(std::size_t p) const { return layout_->order[p]; }
  const Layout& layout() const { return *layout_; }

 private:
  const Layout* layout_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> class_of_;
};

/// Throws MalformedLayout unless `layout` is a permutation plus a partition
/// of V(g).
inline void validate(const Graph& g, const Layout& layout) { IndexedLayout(g.size(), layout); }

// ---------------------------------------------------------------------------
// Layout transforms

inline std::size_t width(const Layout& layout) { return layout.classes.size(); }

/// Reverses the order and the class sequence.
inline Layout reverse(const Layout& layout) {
  Layout out = layout;
  std::reverse(out.order.begin(), out.order.end());
  std::reverse(out.classes.begin(), out.classes.end());
  return out;
}

/// Restriction to `keep`, renumbered the same way as induced_subgraph
/// (increasing original id). Classes that become empty are dropped.
inline Layout restrict(const Layout& layout, std::span<const Vertex> keep) {
  Vertex max_id = 0;
  for (Vertex v : layout.order) max_id = std::max(max_id, v + 1);
  std::vector<char> kept(max_id, 0);
  for (Vertex v : keep)
    if (v < max_id) kept[v] = 1;
  std::vector<Vertex> renumber(max_id, 0);
  Vertex next = 0;
  for (Vertex v = 0; v < max_id; ++v)
    if (kept[v]) renumber[v] = next++;

  Layout out;
  for (Vertex v : layout.order)
    if (kept[v]) out.order.push_back(renumber[v]);
  for (const auto& cls : layout.classes) {
    std::vector<Vertex> c;
    for (Vertex v : cls)
      if (kept[v]) c.push_back(renumber[v]);
    if (!c.empty()) out.classes.push_back(std::move(c));
  }
  return out;
}

/// Precedence layout from classes listed in order, each already internally
/// ordered.
inline Layout layout_from_sequence(std::vector<std::vector<Vertex>> classes) {
  Layout out;
  for (const auto& c : classes) out.order.insert(out.order.end(), c.begin(), c.end());
  out.classes = std::move(classes);
  return out;
}

/// Each class sorted by position; useful before printing.
inline Layout normalized(const Layout& layout) {
  Layout out = layout;
  std::vector<std::size_t> pos(layout.order.size());
  for (std::size_t p = 0; p < layout.order.size(); ++p)
    if (layout.order[p] < pos.size()) pos[layout.order[p]] = p;
  for (auto& c : out.classes)
    std::sort(c.begin(), c.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace detail {

/// Sweep over t in order; within each class the members before t that are
/// adjacent to t must form a suffix. Reports the triple minimizing the
/// positions of (t, s, r) lexicographically.
inline std::optional<BreakingTriple> first_breaking_triple(const Graph& g,
                                                           const IndexedLayout& idx,
                                                           bool reversed) {
  const std::size_t n = idx.size();
  const std::size_t k = idx.class_count();
  auto at = [&](std::size_t p) { return reversed ? idx.at(n - 1 - p) : idx.at(p); };
  std::vector<std::size_t> first_neighbor(k);
  for (std::size_t tp = 0; tp < n; ++tp) {
    const Vertex t = at(tp);
    std::fill(first_neighbor.begin(), first_neighbor.end(), n);
    for (std::size_t sp = 0; sp < tp; ++sp) {
      const Vertex s = at(sp);
      const std::size_t c = idx.class_of(s);
      if (g.adjacent(s, t)) {
        if (first_neighbor[c] == n) first_neighbor[c] = sp;
      } else if (first_neighbor[c] != n) {
        return BreakingTriple{at(first_neighbor[c]), s, t,
                              reversed ? Direction::reversed : Direction::forward};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline Verdict is_consistent(const Graph& g, const Layout& layout) {
  IndexedLayout idx(g.size(), layout);
  if (auto t = detail::first_breaking_triple(g, idx, false)) return Verdict::broken(*t);
  return Verdict::pass();
}

/// Consistency of the order and of its reversal.
inline Verdict is_strongly_consistent(const Graph& g, const Layout& layout) {
  IndexedLayout idx(g.size(), layout);
  if (auto t = detail::first_breaking_triple(g, idx, false)) return Verdict::broken(*t);
  if (auto t = detail::first_breaking_triple(g, idx, true)) return Verdict::broken(*t);
  return Verdict::pass();
}

/// Strong consistency through closed neighbourhoods: for every vertex v and
/// class V, N[v] ∩ (V ∪ {v}) must be consecutive in V ∪ {v}.
inline Verdict check_strong_via_neighborhoods(const Graph& g, const Layout& layout) {
  IndexedLayout idx(g.size(), layout);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (std::size_t c = 0; c < layout.classes.size(); ++c) {
      std::vector<Vertex> members = layout.classes[c];
      if (idx.class_of(v) != c) members.push_back(v);
      std::sort(members.begin(), members.end(),
                [&](Vertex a, Vertex b) { return idx.position(a) < idx.position(b); });
      // in N[v]: first run start, then no gap allowed
      int state = 0;  // 0 = before run, 1 = inside run, 2 = after run
      Vertex run_start = 0;
      for (Vertex u : members) {
        const bool in = u == v || g.adjacent(u, v);
        if (in && state == 0) {
          state = 1;
          run_start = u;
        } else if (!in && state == 1) {
          state = 2;
        } else if (in && state == 2) {
          Verdict out;
          out.violation = Violation::neighborhood_not_consecutive;
          out.pair = Edge{v, run_start};
          out.class_index = c;
          return out;
        }
      }
    }
  }
  return Verdict::pass();
}

/// Each class occupies a contiguous block of positions and the class list
/// follows position order.
inline bool is_precedence(const Layout& layout) {
  IndexedLayout idx(layout.order.size(), layout);
  std::size_t current = 0;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const std::size_t c = idx.class_of(idx.at(p));
    if (c < current || c > current + 1) return false;
    if (p == 0 && c != 0) return false;
    current = c;
  }
  return true;
}

namespace detail {
inline Verdict class_pair_check(const Graph& g, const Layout& layout, bool want_edges) {
  for (std::size_t c = 0; c < layout.classes.size(); ++c) {
    const auto& cls = layout.classes[c];
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (g.adjacent(cls[a], cls[b]) != want_edges) {
          Verdict out;
          out.violation = want_edges ? Violation::class_not_complete : Violation::class_not_independent;
          out.pair = Edge{cls[a], cls[b]};
          out.class_index = c;
          return out;
        }
  }
  return Verdict::pass();
}
}  // namespace detail

inline Verdict check_classes_independent(const Graph& g, const Layout& layout) {
  return detail::class_pair_check(g, layout, false);
}
inline Verdict check_classes_complete(const Graph& g, const Layout& layout) {
  return detail::class_pair_check(g, layout, true);
}
inline bool classes_independent(const Graph& g, const Layout& layout) {
  return check_classes_independent(g, layout).ok();
}
inline bool classes_complete(const Graph& g, const Layout& layout) {
  return check_classes_complete(g, layout).ok();
}

/// Checks consistency mode, then precedence, then the class constraint, and
/// reports the first failing sub-check.
inline Verdict verify(const Graph& g, const Layout& layout, const VariantSpec& spec) {
  validate(g, layout);
  Verdict v = spec.consistency == Consistency::strong ? is_strongly_consistent(g, layout)
                                                      : is_consistent(g, layout);
  if (!v) return v;
  if (spec.precedence && !is_precedence(layout)) return {Violation::not_precedence, {}, {}, {}};
  switch (spec.class_constraint) {
    case ClassConstraint::any: return Verdict::pass();
    case ClassConstraint::independent: return check_classes_independent(g, layout);
    case ClassConstraint::complete: return check_classes_complete(g, layout);
  }
  return Verdict::pass();
}

}  // namespace thinness
