#pragma once

// JSON formats. Requires nlohmann/json (json.hpp) on the include path.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinness/graph.hpp"
#include "thinness/layout.hpp"

namespace thinness::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t index(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw FormatError(std::string(what) + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::vector<std::size_t> index_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(index(x, what));
  return out;
}

}  // namespace detail

/// {"n": <int>, "edges": [[u, v], ...]} with u < v, edges sorted.
inline json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  const std::size_t n = detail::index(detail::field(j, "n"), "n");
  const json& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw FormatError("edges: expected an array");
  GraphBuilder b(n);
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw FormatError("edges: each edge must be a pair");
    const std::size_t u = detail::index(e[0], "edge endpoint"), v = detail::index(e[1], "edge endpoint");
    try {
      b.add_edge(u, v);
    } catch (const std::exception& ex) {
      throw FormatError(std::string("edges: ") + ex.what());
    }
  }
  return std::move(b).build();
}

/// {"order": [...], "classes": [[...], ...]}
inline json to_json(const Layout& l) { return {{"order", l.order}, {"classes", l.classes}}; }

inline Layout layout_from_json(const json& j) {
  Layout l;
  l.order = detail::index_list(detail::field(j, "order"), "order");
  const json& classes = detail::field(j, "classes");
  if (!classes.is_array()) throw FormatError("classes: expected an array");
  for (const auto& c : classes) l.classes.push_back(detail::index_list(c, "classes"));
  return l;
}

/// {"order": [...]}
inline std::vector<Vertex> order_from_json(const json& j) {
  return detail::index_list(detail::field(j, "order"), "order");
}

/// {"mu": [m0, m1, ...]}
inline std::vector<std::size_t> mu_from_json(const json& j) {
  return detail::index_list(detail::field(j, "mu"), "mu");
}

inline json to_json(const Verdict& v) {
  json out = {{"ok", v.ok()}, {"violation", std::string(violation_name(v.violation))}};
  if (v.triple)
    out["triple"] = {{"r", v.triple->r},
                     {"s", v.triple->s},
                     {"t", v.triple->t},
                     {"direction", v.triple->direction == Direction::forward ? "forward" : "reversed"}};
  if (v.pair) out["pair"] = {v.pair->first, v.pair->second};
  if (v.class_index) out["class"] = *v.class_index;
  return out;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace thinness::io
