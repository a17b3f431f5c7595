#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thinness/graph.hpp"
#include "thinness/layout.hpp"

namespace thinness::cograph {

/// Cotree over leaves numbered 0, 1, ... from left to right.
struct CotreeExpr {
  enum class Kind { leaf, disjoint_union, join };
  Kind kind = Kind::leaf;
  std::vector<CotreeExpr> children;

  static CotreeExpr leaf() { return {}; }
  static CotreeExpr make(Kind kind, std::vector<CotreeExpr> children) {
    if (kind == Kind::leaf || children.size() < 2)
      throw std::invalid_argument("cotree node needs an operator and at least two children");
    return {kind, std::move(children)};
  }

  std::size_t leaf_count() const {
    if (kind == Kind::leaf) return 1;
    std::size_t total = 0;
    for (const auto& c : children) total += c.leaf_count();
    return total;
  }

  friend bool operator==(const CotreeExpr&, const CotreeExpr&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CotreeExpr parse() {
    CotreeExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  CotreeExpr expr() {
    const char c = peek();
    if (c == '1') {
      ++pos_;
      return CotreeExpr::leaf();
    }
    if (c != '(') throw ParseError(c == '\0' ? "unexpected end of input" : "expected '1' or '('", pos_);
    ++pos_;
    std::vector<CotreeExpr> children;
    children.push_back(expr());
    char op = '\0';
    while (true) {
      const char next = peek();
      if (next == ')') {
        if (op == '\0') throw ParseError("expected '+' or '*'", pos_);
        ++pos_;
        break;
      }
      if (next != '+' && next != '*')
        throw ParseError(next == '\0' ? "unexpected end of input" : "expected '+', '*' or ')'", pos_);
      if (op != '\0' && next != op) throw ParseError("mixed operators in one group", pos_);
      op = next;
      ++pos_;
      children.push_back(expr());
    }
    return CotreeExpr::make(op == '+' ? CotreeExpr::Kind::disjoint_union : CotreeExpr::Kind::join,
                            std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: expr := '1' | '(' expr (op expr)+ ')', op is '+' (union) or
/// '*' (join), one operator per group. Whitespace is ignored.
inline CotreeExpr parse_cotree(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string to_string(const CotreeExpr& e) {
  if (e.kind == CotreeExpr::Kind::leaf) return "1";
  const char op = e.kind == CotreeExpr::Kind::disjoint_union ? '+' : '*';
  std::string out = "(";
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i > 0) out += op;
    out += to_string(e.children[i]);
  }
  return out + ")";
}

inline Graph evaluate(const CotreeExpr& e) {
  if (e.kind == CotreeExpr::Kind::leaf) return edgeless(1);
  Graph g = evaluate(e.children.front());
  for (std::size_t i = 1; i < e.children.size(); ++i) {
    const Graph h = evaluate(e.children[i]);
    g = e.kind == CotreeExpr::Kind::join ? join(g, h) : disjoint_union(g, h);
  }
  return g;
}

inline bool is_complete_expr(const CotreeExpr& e) {
  switch (e.kind) {
    case CotreeExpr::Kind::leaf:
      return true;
    case CotreeExpr::Kind::join:
      return std::all_of(e.children.begin(), e.children.end(), is_complete_expr);
    case CotreeExpr::Kind::disjoint_union:
      return false;
  }
  return false;
}

enum class Parameter { thin, fp };

namespace detail {

struct Solved {
  std::size_t value = 0;
  Layout layout;
  bool complete = false;
};

inline Layout shifted(const Layout& l, std::size_t offset) {
  Layout out = l;
  for (auto& v : out.order) v += offset;
  for (auto& c : out.classes)
    for (auto& v : c) v += offset;
  return out;
}

inline void append(std::vector<Vertex>& to, const std::vector<Vertex>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

inline Solved combine_union(Parameter p, Solved a, const Solved& b) {
  Solved out;
  out.layout.order = std::move(a.layout.order);
  append(out.layout.order, b.layout.order);
  if (p == Parameter::fp) {
    out.layout.classes = std::move(a.layout.classes);
    append(out.layout.classes.back(), b.layout.classes.front());
    out.layout.classes.insert(out.layout.classes.end(), b.layout.classes.begin() + 1,
                              b.layout.classes.end());
    out.value = a.value + b.value - 1;
  } else {
    out.layout.classes = std::move(a.layout.classes);
    out.layout.classes.resize(std::max(a.value, b.value));
    for (std::size_t i = 0; i < b.layout.classes.size(); ++i)
      append(out.layout.classes[i], b.layout.classes[i]);
    out.value = std::max(a.value, b.value);
  }
  return out;
}

inline Solved combine_join(Solved a, const Solved& b) {
  Solved out;
  out.layout.order = std::move(a.layout.order);
  append(out.layout.order, b.layout.order);
  out.layout.classes = std::move(a.layout.classes);
  if (b.complete) {
    for (const auto& c : b.layout.classes) append(out.layout.classes.back(), c);
    out.value = a.value;
    out.complete = a.complete;
  } else {
    out.layout.classes.insert(out.layout.classes.end(), b.layout.classes.begin(),
                              b.layout.classes.end());
    out.value = a.value + b.value;
  }
  return out;
}

inline Solved solve(const CotreeExpr& e, Parameter p, std::size_t offset) {
  if (e.kind == CotreeExpr::Kind::leaf) return {1, Layout{{offset}, {{offset}}}, true};

  std::vector<Solved> parts;
  std::size_t at = offset;
  for (const auto& c : e.children) {
    parts.push_back(solve(c, p, at));
    at += c.leaf_count();
  }
  if (e.kind == CotreeExpr::Kind::join)
    std::stable_partition(parts.begin(), parts.end(), [](const Solved& s) { return !s.complete; });

  Solved acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = e.kind == CotreeExpr::Kind::join ? combine_join(std::move(acc), parts[i])
                                           : combine_union(p, std::move(acc), parts[i]);
  if (e.kind == CotreeExpr::Kind::disjoint_union) acc.complete = false;
  return acc;
}

}  // namespace detail

inline std::size_t thin_cograph(const CotreeExpr& e) {
  return detail::solve(e, Parameter::thin, 0).value;
}

inline std::size_t fp_cograph(const CotreeExpr& e) {
  return detail::solve(e, Parameter::fp, 0).value;
}

/// Consistent layout of evaluate(e) with thin_cograph(e) classes.
inline Layout witness_thin(const CotreeExpr& e) {
  return normalized(detail::solve(e, Parameter::thin, 0).layout);
}

/// Consistent precedence layout of evaluate(e) with fp_cograph(e) classes.
inline Layout witness_fp(const CotreeExpr& e) {
  return normalized(detail::solve(e, Parameter::fp, 0).layout);
}

}  // namespace thinness::cograph
