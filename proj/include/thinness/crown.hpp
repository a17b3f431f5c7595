#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thinness/graph.hpp"
#include "thinness/layout.hpp"

namespace thinness::crown_family {

/// Closed-form value of each thinness variant on CR_n.
inline std::size_t table1_value(const VariantSpec& spec, std::size_t n) {
  if (n == 0) throw std::invalid_argument("table1_value: n must be positive");
  const bool strong = spec.consistency == Consistency::strong;
  switch (spec.class_constraint) {
    case ClassConstraint::any:
      if (!spec.precedence) {
        if (n <= 2) return 1;
        if (n == 3) return 2;
        return (strong && n % 2 == 1) ? n : n - 1;
      }
      if (!strong) return n <= 2 ? 1 : n - 1;
      if (n <= 2) return 1;
      if (n == 3) return 3;
      return n + 1;
    case ClassConstraint::independent:
      if (!spec.precedence) return n;
      return n == 1 ? 1 : n + 1;
    case ClassConstraint::complete:
      if (!spec.precedence) {
        if (n <= 2) return 2;
        if (n == 3) return 3;
        return 2 * n - 4;
      }
      return n == 1 ? 2 : 2 * n - 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Little / big vertices

enum class Size { little, big };

struct LittleBigClassification {
  /// tag[v] for every vertex of the crown.
  std::vector<Size> tag;

  bool little(Vertex v) const { return tag[v] == Size::little; }
  std::size_t count_little() const {
    std::size_t c = 0;
    for (auto t : tag) c += t == Size::little ? 1 : 0;
    return c;
  }
};

/// v is little when it precedes its mirror in `order`.
inline LittleBigClassification classify_little_big(const CrownLabeling& lab,
                                                   std::span<const Vertex> order) {
  std::vector<std::size_t> pos(2 * lab.n);
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = p;
  LittleBigClassification out;
  out.tag.resize(2 * lab.n);
  for (Vertex v = 0; v < 2 * lab.n; ++v)
    out.tag[v] = pos[v] < pos[lab.mirror(v)] ? Size::little : Size::big;
  return out;
}

// ---------------------------------------------------------------------------
// Characterization of consistency on crowns

struct ConditionVerdict {
  bool ok = true;
  /// Vertices exhibiting the failure, in the order they appear in the
  /// condition statement.
  std::vector<Vertex> witness;
  std::optional<std::size_t> class_index;
};

namespace detail {
inline void check_is_crown(const Graph& g, const CrownLabeling& lab) {
  if (g.size() != 2 * lab.n) throw std::invalid_argument("labeling does not match graph size");
  for (std::size_t i = 1; i <= lab.n; ++i) {
    if (g.degree(lab.v(i)) != lab.n - 1 || g.degree(lab.v_prime(i)) != lab.n - 1)
      throw std::invalid_argument("labeling inconsistent with graph: wrong degree");
    for (std::size_t j = 1; j <= lab.n; ++j)
      if (g.adjacent(lab.v(i), lab.v_prime(j)) != (i != j))
        throw std::invalid_argument("labeling inconsistent with graph at (v" + std::to_string(i) +
                                    ", v'" + std::to_string(j) + ")");
  }
}
}  // namespace detail

/// Every little vertex is the first vertex of its side within its class.
inline ConditionVerdict check_condition1(const Graph& g, const CrownLabeling& lab,
                                         const Layout& layout) {
  detail::check_is_crown(g, lab);
  IndexedLayout idx(g.size(), layout);
  for (std::size_t c = 0; c < layout.classes.size(); ++c) {
    for (Vertex v : layout.classes[c]) {
      if (idx.position(v) >= idx.position(lab.mirror(v))) continue;
      for (Vertex w : layout.classes[c])
        if (lab.side(w) == lab.side(v) && idx.position(w) < idx.position(v))
          return {false, {v, w}, c};
    }
  }
  return {};
}

/// For v_i, v'_j sharing a class: no v'_z (z != i) after v_i < v'_j, and no
/// v_z (z != j) after v'_j < v_i.
inline ConditionVerdict check_condition2(const Graph& g, const CrownLabeling& lab,
                                         const Layout& layout) {
  detail::check_is_crown(g, lab);
  IndexedLayout idx(g.size(), layout);
  const std::size_t n = lab.n;
  for (std::size_t c = 0; c < layout.classes.size(); ++c) {
    for (Vertex a : layout.classes[c]) {
      if (lab.side(a) != CrownSide::A) continue;
      for (Vertex b : layout.classes[c]) {
        if (lab.side(b) != CrownSide::B) continue;
        const std::size_t i = lab.index(a);
        const std::size_t j = lab.index(b);
        const bool a_first = idx.position(a) < idx.position(b);
        const Vertex later = a_first ? b : a;
        for (std::size_t z = 1; z <= n; ++z) {
          const Vertex cand = a_first ? lab.v_prime(z) : lab.v(z);
          const bool excluded = a_first ? z == i : z == j;
          if (!excluded && idx.position(cand) > idx.position(later))
            return {false, {a, b, cand}, c};
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Witness layouts

namespace detail {

/// Builds layouts from 1-based crown names: positive i is v_i, negative i is v'_{-i}.
struct Names {
  const CrownLabeling& lab;
  Vertex operator()(long i) const {
    return i > 0 ? lab.v(static_cast<std::size_t>(i)) : lab.v_prime(static_cast<std::size_t>(-i));
  }
  std::vector<Vertex> operator()(std::initializer_list<long> xs) const {
    std::vector<Vertex> out;
    for (long x : xs) out.push_back((*this)(x));
    return out;
  }
};

inline Layout make(std::vector<Vertex> order, std::vector<std::vector<Vertex>> classes) {
  return Layout{std::move(order), std::move(classes)};
}

// Strongly consistent, max(1, n-1) classes, n <= 4.
inline Layout small_thin(const CrownLabeling& lab) {
  Names x{lab};
  switch (lab.n) {
    case 1: return make(x({1, -1}), {x({1, -1})});
    case 2: return make(x({1, -2, 2, -1}), {x({1, -2, 2, -1})});
    case 3: return make(x({1, -2, -3, 3, 2, -1}), {x({1, -3, 2}), x({-2, 3, -1})});
    case 4:
      return make(x({1, -3, 4, -4, -2, 2, 3, -1}), {x({1, -2, -1}), x({-3, -4, 3}), x({4, 2})});
  }
  throw std::logic_error("small_thin: n > 4");
}

/// Strongly consistent layout with n-1 classes, even n >= 6.
inline Layout strong_even(const CrownLabeling& lab) {
  const long n = static_cast<long>(lab.n);
  Names x{lab};
  std::vector<std::vector<Vertex>> classes(lab.n - 1);
  classes[0] = x({1, -2, -1});
  classes[1] = x({-3, -4, 3});
  classes[2] = x({4, 2});
  classes[3] = {x(5), x(n)};
  classes[4] = x({-6, -5});
  std::vector<Vertex> middle = x({-6, -5});
  for (long i = 7; i <= n - 1; i += 2) {
    for (long v : {i, i - 1, -(i + 1), -i}) middle.push_back(x(v));
    classes[static_cast<std::size_t>(i - 2)] = {x(i), x(i - 1)};
    classes[static_cast<std::size_t>(i - 1)] = {x(-(i + 1)), x(-i)};
  }
  std::vector<Vertex> order = x({1, -3, 4, -4, 5});
  order.insert(order.end(), middle.begin(), middle.end());
  for (long v : {n, -2L, 2L, 3L, -1L}) order.push_back(x(v));
  return make(std::move(order), std::move(classes));
}

/// Consistent (not strongly) layout with n-1 classes, odd n >= 3.
inline Layout consistent_odd(const CrownLabeling& lab) {
  const long n = static_cast<long>(lab.n);
  Names x{lab};
  std::vector<std::vector<Vertex>> classes(lab.n - 1);
  std::vector<Vertex> order;
  for (long i = 1; i <= n - 2; i += 2) {
    for (long v : {i, -(i + 1), i + 1, -i}) order.push_back(x(v));
    classes[static_cast<std::size_t>(i - 1)] = {x(i), x(i + 1)};
    classes[static_cast<std::size_t>(i)] = {x(-(i + 1)), x(-i)};
  }
  order.push_back(x(n));
  order.push_back(x(-n));
  classes[static_cast<std::size_t>(n - 2)].push_back(x(n));
  classes[static_cast<std::size_t>(n - 3)].push_back(x(-n));
  return make(std::move(order), std::move(classes));
}

/// Strongly consistent layout with n classes, odd n >= 5.
inline Layout strong_odd(const CrownLabeling& lab) {
  const long n = static_cast<long>(lab.n);
  Names x{lab};
  std::vector<std::vector<Vertex>> classes(lab.n);
  std::vector<Vertex> order{x(1)};
  for (long i = 2; i < n; i += 2) {
    for (long v : {-i, -(i - 1), i + 1, i}) order.push_back(x(v));
    classes[static_cast<std::size_t>(i - 1)] = {x(-i), x(-(i - 1))};
    classes[static_cast<std::size_t>(i)] = {x(i + 1), x(i)};
  }
  order.push_back(x(-n));
  classes[0] = {x(1), x(-n)};
  return make(std::move(order), std::move(classes));
}

/// Independent classes, strongly consistent, n classes.
inline Layout independent(const CrownLabeling& lab) {
  Names x{lab};
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> classes;
  const long n = static_cast<long>(lab.n);
  // sigma_n = sigma_{n-2} + (v_{n-1}, v'_n, v_n, v'_{n-1}) for even n
  const long even_part = n % 2 == 0 ? n : n - 1;
  for (long k = 2; k <= even_part; k += 2) {
    for (long v : {k - 1, -k, k, -(k - 1)}) order.push_back(x(v));
    classes.push_back({x(k - 1), x(k)});
    classes.push_back({x(-(k - 1)), x(-k)});
  }
  if (n % 2 == 1) {
    // sigma_n = (v_n) + sigma_{n-1} + (v'_n)
    order.insert(order.begin(), x(n));
    order.push_back(x(-n));
    classes.push_back({x(n), x(-n)});
  }
  return make(std::move(order), std::move(classes));
}

/// Complete classes, strongly consistent, 2n-4 classes for n >= 4.
inline Layout complete_classes(const CrownLabeling& lab) {
  Names x{lab};
  const long n = static_cast<long>(lab.n);
  switch (n) {
    case 1: return make(x({1, -1}), {x({1}), x({-1})});
    case 2: return make(x({1, -2, 2, -1}), {x({1, -2}), x({2, -1})});
    case 3: return make(x({1, -2, 3, -1, 2, -3}), {x({1, -3}), x({-2, 3}), x({-1, 2})});
    default: break;
  }
  std::vector<Vertex> order = x({-1, -2});
  for (long i = 5; i <= n; ++i) order.push_back(x(-i));
  order.push_back(x(4));
  order.push_back(x(3));
  for (long i = 5; i <= n; ++i) order.push_back(x(i));
  for (long v : {2L, 1L, -3L, -4L}) order.push_back(x(v));
  std::vector<std::vector<Vertex>> classes{x({-1, 2}), x({-2, 1}), x({4, -3}), x({3, -4})};
  for (long i = 5; i <= n; ++i) {
    classes.push_back({x(-i)});
    classes.push_back({x(i)});
  }
  return make(std::move(order), std::move(classes));
}

/// Precedence, consistent, max(1, n-1) classes.
inline Layout precedence(const CrownLabeling& lab) {
  Names x{lab};
  const long n = static_cast<long>(lab.n);
  switch (n) {
    case 1: return layout_from_sequence({x({1, -1})});
    case 2: return layout_from_sequence({x({1, -2, 2, -1})});
    case 3: return layout_from_sequence({x({-1}), x({2, -3, 1, -2, 3})});
    case 4: return layout_from_sequence({x({-1}), x({2, 1}), x({-3, 4, -2, 3, -4})});
    default: break;
  }
  std::vector<std::vector<Vertex>> seq{x({-1}), x({2, 1}), x({-3, -2})};
  for (long i = 4; i < n - 1; ++i)
    seq.push_back(i % 2 == 0 ? std::vector<Vertex>{x(i), x(i - 1)}
                             : std::vector<Vertex>{x(-i), x(-(i - 1))});
  if (n % 2 == 0)
    seq.push_back(x({-(n - 1), n, -(n - 2), n - 1, -n}));
  else
    seq.push_back(x({n - 1, -n, n - 2, -(n - 1), n}));
  return layout_from_sequence(std::move(seq));
}

/// Precedence, strongly consistent, n+1 classes for n >= 4. The same
/// sequence has independent classes, so it also realizes indfp/indfpp.
inline Layout precedence_strong(const CrownLabeling& lab) {
  Names x{lab};
  const long n = static_cast<long>(lab.n);
  std::vector<std::vector<Vertex>> seq{x({1})};
  for (long i = 2; i <= n; ++i)
    seq.push_back(i % 2 == 0 ? x({-i, -(i - 1)}) : x({i, i - 1}));
  seq.push_back(n % 2 == 0 ? x({n}) : x({-n}));
  return layout_from_sequence(std::move(seq));
}

/// Precedence, independent classes, strongly consistent, n+1 classes.
inline Layout precedence_independent(const CrownLabeling& lab) {
  Names x{lab};
  const long n = static_cast<long>(lab.n);
  if (n == 1) return layout_from_sequence({x({1, -1})});
  if (n == 2) return layout_from_sequence({x({1}), x({-2, -1}), x({2})});
  std::vector<std::vector<Vertex>> seq{x({1})};
  const long last_i = n % 2 == 1 ? n - 2 : n - 3;
  for (long i = 1; i <= last_i; i += 2) {
    seq.push_back(x({-(i + 1), -i}));
    seq.push_back(x({i + 2, i + 1}));
  }
  if (n % 2 == 1) {
    seq.push_back(x({-n}));
  } else {
    seq.push_back(x({-n, -(n - 1)}));
    seq.push_back(x({n}));
  }
  return layout_from_sequence(std::move(seq));
}

/// Precedence, complete classes, strongly consistent, 2n-2 classes.
inline Layout precedence_complete(const CrownLabeling& lab) {
  Names x{lab};
  const long n = static_cast<long>(lab.n);
  if (n == 1) return layout_from_sequence({x({1}), x({-1})});
  std::vector<std::vector<Vertex>> seq;
  for (long i = 3; i <= n; ++i) seq.push_back({x(-i)});
  seq.push_back(x({1, -2}));
  seq.push_back(x({2, -1}));
  for (long i = 3; i <= n; ++i) seq.push_back({x(i)});
  return layout_from_sequence(std::move(seq));
}

}  // namespace detail

/// Witness layout for `spec` on CR_n whose width equals table1_value.
inline Layout construct(const VariantSpec& spec, std::size_t n) {
  if (n == 0) throw std::invalid_argument("construct: n must be positive");
  const CrownLabeling lab{n};
  const bool strong = spec.consistency == Consistency::strong;
  switch (spec.class_constraint) {
    case ClassConstraint::independent:
      return spec.precedence ? detail::precedence_independent(lab) : detail::independent(lab);
    case ClassConstraint::complete:
      return spec.precedence ? detail::precedence_complete(lab) : detail::complete_classes(lab);
    case ClassConstraint::any: break;
  }
  if (spec.precedence) {
    if (!strong) return detail::precedence(lab);
    if (n <= 2) return detail::precedence(lab);
    if (n == 3) {
      detail::Names x{lab};
      return layout_from_sequence({x({1}), x({-2, 3, -1, 2}), x({-3})});
    }
    return detail::precedence_strong(lab);
  }
  if (n <= 4) return detail::small_thin(lab);
  if (n % 2 == 0) return detail::strong_even(lab);
  return strong ? detail::strong_odd(lab) : detail::consistent_odd(lab);
}

}  // namespace thinness::crown_family
