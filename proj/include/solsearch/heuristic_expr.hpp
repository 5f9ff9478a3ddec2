#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "../../packages/ref_solver/solver_core.hpp"  // VarFeatures

namespace solsearch {

class ExprError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic over per-variable decision features. Interpreted scoring is
// the hermetic alternative to source-level patching: a candidate ordering
// can be tried without any build toolchain.
enum class ExprOp { constant, feature, add, sub, mul, div, min, max, neg };

enum class VarFeatureId { activity, saved_phase, conflicts_since_last_bump, var_index };

// Expression tree in a flat node vector; children come before parents and
// the last node is the root. Plain value semantics.
struct HeuristicExpr {
  struct Node {
    ExprOp op = ExprOp::constant;
    double value = 0.0;                               // constant
    VarFeatureId feature = VarFeatureId::activity;    // feature
    int lhs = -1;
    int rhs = -1;

    bool operator==(const Node&) const = default;
  };

  std::vector<Node> nodes;

  bool operator==(const HeuristicExpr&) const = default;
};

inline double eval(const HeuristicExpr& expr, const VarFeatures& f) {
  if (expr.nodes.empty()) throw ExprError("empty expression");
  std::vector<double> out(expr.nodes.size());
  for (std::size_t i = 0; i < expr.nodes.size(); ++i) {
    const auto& n = expr.nodes[i];
    auto l = [&] { return out[static_cast<std::size_t>(n.lhs)]; };
    auto r = [&] { return out[static_cast<std::size_t>(n.rhs)]; };
    switch (n.op) {
      case ExprOp::constant: out[i] = n.value; break;
      case ExprOp::feature:
        switch (n.feature) {
          case VarFeatureId::activity: out[i] = f.activity; break;
          case VarFeatureId::saved_phase: out[i] = f.saved_phase; break;
          case VarFeatureId::conflicts_since_last_bump:
            out[i] = f.conflicts_since_last_bump;
            break;
          case VarFeatureId::var_index: out[i] = f.var_index; break;
        }
        break;
      case ExprOp::add: out[i] = l() + r(); break;
      case ExprOp::sub: out[i] = l() - r(); break;
      case ExprOp::mul: out[i] = l() * r(); break;
      // Division is total: anything over zero is zero, so no interpreted
      // candidate can fault the solver.
      case ExprOp::div: out[i] = r() == 0.0 ? 0.0 : l() / r(); break;
      case ExprOp::min: out[i] = std::min(l(), r()); break;
      case ExprOp::max: out[i] = std::max(l(), r()); break;
      case ExprOp::neg: out[i] = -l(); break;
    }
  }
  return out.back();
}

namespace expr_detail {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  HeuristicExpr expr;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ExprError(what + " at position " + std::to_string(pos));
  }

  int push(HeuristicExpr::Node n) {
    expr.nodes.push_back(n);
    return static_cast<int>(expr.nodes.size()) - 1;
  }

  int push_binary(ExprOp op, int lhs, int rhs) {
    HeuristicExpr::Node n;
    n.op = op;
    n.lhs = lhs;
    n.rhs = rhs;
    return push(n);
  }

  // expr := term (('+'|'-') term)*
  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (consume('+'))
        lhs = push_binary(ExprOp::add, lhs, parse_term());
      else if (consume('-'))
        lhs = push_binary(ExprOp::sub, lhs, parse_term());
      else
        return lhs;
    }
  }

  // term := factor (('*'|'/') factor)*
  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (consume('*'))
        lhs = push_binary(ExprOp::mul, lhs, parse_factor());
      else if (consume('/'))
        lhs = push_binary(ExprOp::div, lhs, parse_factor());
      else
        return lhs;
    }
  }

  // factor := '-' factor | primary   (unary minus binds tightest)
  int parse_factor() {
    if (consume('-')) {
      HeuristicExpr::Node n;
      n.op = ExprOp::neg;
      n.lhs = parse_factor();
      return push(n);
    }
    return parse_primary();
  }

  int parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      int inner = parse_expr();
      if (!consume(')')) fail("unbalanced parentheses: expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* start = text.data() + pos;
      char* end = nullptr;
      double value = std::strtod(start, &end);
      if (end == start) fail("malformed number");
      pos += static_cast<std::size_t>(end - start);
      HeuristicExpr::Node n;
      n.op = ExprOp::constant;
      n.value = value;
      return push(n);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      std::string ident(text.substr(start, pos - start));
      if (ident == "min" || ident == "max") {
        if (!consume('(')) fail("expected '(' after " + ident);
        int lhs = parse_expr();
        if (!consume(',')) fail("expected ',' in " + ident + "(..)");
        int rhs = parse_expr();
        if (!consume(')')) fail("unbalanced parentheses: expected ')'");
        return push_binary(ident == "min" ? ExprOp::min : ExprOp::max, lhs, rhs);
      }
      if (ident == "neg") {
        if (!consume('(')) fail("expected '(' after neg");
        int inner = parse_expr();
        if (!consume(')')) fail("unbalanced parentheses: expected ')'");
        HeuristicExpr::Node n;
        n.op = ExprOp::neg;
        n.lhs = inner;
        return push(n);
      }
      HeuristicExpr::Node n;
      n.op = ExprOp::feature;
      if (ident == "activity")
        n.feature = VarFeatureId::activity;
      else if (ident == "saved_phase")
        n.feature = VarFeatureId::saved_phase;
      else if (ident == "conflicts_since_last_bump")
        n.feature = VarFeatureId::conflicts_since_last_bump;
      else if (ident == "var_index")
        n.feature = VarFeatureId::var_index;
      else
        fail("unknown identifier '" + ident + "'");
      return push(n);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace expr_detail

inline HeuristicExpr parse_heuristic_expr(std::string_view text) {
  expr_detail::Parser p{text};
  if (p.eof()) throw ExprError("empty expression");
  p.parse_expr();
  if (!p.eof()) p.fail("trailing input");
  return std::move(p.expr);
}

// Fully parenthesized form; parsing it back yields a structurally
// identical tree.
inline std::string pretty_print(const HeuristicExpr& expr) {
  if (expr.nodes.empty()) return "";
  std::vector<std::string> out(expr.nodes.size());
  for (std::size_t i = 0; i < expr.nodes.size(); ++i) {
    const auto& n = expr.nodes[i];
    auto l = [&]() -> const std::string& {
      return out[static_cast<std::size_t>(n.lhs)];
    };
    auto r = [&]() -> const std::string& {
      return out[static_cast<std::size_t>(n.rhs)];
    };
    switch (n.op) {
      case ExprOp::constant: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n.value);
        out[i] = buf;
        break;
      }
      case ExprOp::feature:
        switch (n.feature) {
          case VarFeatureId::activity: out[i] = "activity"; break;
          case VarFeatureId::saved_phase: out[i] = "saved_phase"; break;
          case VarFeatureId::conflicts_since_last_bump:
            out[i] = "conflicts_since_last_bump";
            break;
          case VarFeatureId::var_index: out[i] = "var_index"; break;
        }
        break;
      case ExprOp::add: out[i] = "(" + l() + " + " + r() + ")"; break;
      case ExprOp::sub: out[i] = "(" + l() + " - " + r() + ")"; break;
      case ExprOp::mul: out[i] = "(" + l() + " * " + r() + ")"; break;
      case ExprOp::div: out[i] = "(" + l() + " / " + r() + ")"; break;
      case ExprOp::min: out[i] = "min(" + l() + ", " + r() + ")"; break;
      case ExprOp::max: out[i] = "max(" + l() + ", " + r() + ")"; break;
      case ExprOp::neg: out[i] = "neg(" + l() + ")"; break;
    }
  }
  return out.back();
}

}  // namespace solsearch
