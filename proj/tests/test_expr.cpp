#include <catch2/catch_amalgamated.hpp>

#include "solsearch/heuristic_expr.hpp"

using namespace solsearch;

namespace {
VarFeatures sample_features() {
  VarFeatures f;
  f.activity = 2.5;
  f.saved_phase = 1.0;
  f.conflicts_since_last_bump = 7.0;
  f.var_index = 3.0;
  return f;
}
}  // namespace

TEST_CASE("single feature and constant expressions") {
  CHECK(eval(parse_heuristic_expr("activity"), sample_features()) == 2.5);
  CHECK(eval(parse_heuristic_expr("0"), sample_features()) == 0.0);
  CHECK(eval(parse_heuristic_expr("var_index"), sample_features()) == 3.0);
}

TEST_CASE("precedence: products bind tighter than sums, neg tightest") {
  auto f = sample_features();
  CHECK(eval(parse_heuristic_expr("1 + 2 * 3"), f) == 7.0);
  CHECK(eval(parse_heuristic_expr("(1 + 2) * 3"), f) == 9.0);
  CHECK(eval(parse_heuristic_expr("-2 * 3"), f) == -6.0);
  CHECK(eval(parse_heuristic_expr("2 - 1 - 1"), f) == 0.0);  // left assoc
  CHECK(eval(parse_heuristic_expr("8 / 2 / 2"), f) == 2.0);
  CHECK(eval(parse_heuristic_expr("activity + 0.5*saved_phase"), f) == 3.0);
}

TEST_CASE("min, max and neg use call syntax") {
  auto f = sample_features();
  CHECK(eval(parse_heuristic_expr("min(activity, 1)"), f) == 1.0);
  CHECK(eval(parse_heuristic_expr("max(activity, var_index)"), f) == 3.0);
  CHECK(eval(parse_heuristic_expr("neg(activity)"), f) == -2.5);
  CHECK(parse_heuristic_expr("neg(activity)") == parse_heuristic_expr("-activity"));
}

TEST_CASE("division by zero evaluates to zero") {
  auto f = sample_features();
  CHECK(eval(parse_heuristic_expr("activity / 0"), f) == 0.0);
  CHECK(eval(parse_heuristic_expr("1 / (saved_phase - 1)"), f) == 0.0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_heuristic_expr(""), ExprError);
  CHECK_THROWS_AS(parse_heuristic_expr("   "), ExprError);
  CHECK_THROWS_AS(parse_heuristic_expr("(activity"), ExprError);
  CHECK_THROWS_AS(parse_heuristic_expr("activity)"), ExprError);
  CHECK_THROWS_AS(parse_heuristic_expr("speed"), ExprError);
  CHECK_THROWS_AS(parse_heuristic_expr("min(activity)"), ExprError);
  CHECK_THROWS_AS(parse_heuristic_expr("1 + "), ExprError);
  CHECK_THROWS_AS(parse_heuristic_expr("1 2"), ExprError);
}

TEST_CASE("pretty-print round-trips structurally") {
  const char* samples[] = {
      "activity",
      "activity + 0.5*saved_phase",
      "min(activity, max(1, var_index))",
      "neg(activity) * (conflicts_since_last_bump - 2.25)",
      "-(activity + 1) / var_index",
      "0.0001 * var_index + 1e3",
  };
  for (const char* text : samples) {
    HeuristicExpr parsed = parse_heuristic_expr(text);
    std::string printed = pretty_print(parsed);
    HeuristicExpr reparsed = parse_heuristic_expr(printed);
    CHECK(reparsed == parsed);
    CHECK(pretty_print(reparsed) == printed);
  }
}

TEST_CASE("random expression trees round-trip") {
  // Grow random trees bottom-up, print, reparse, compare structurally.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    SplitMix64 rng(seed);
    HeuristicExpr expr;
    auto leaf = [&]() -> int {
      HeuristicExpr::Node n;
      if (rng.coin()) {
        n.op = ExprOp::constant;
        n.value = static_cast<double>(rng.below(1000)) / 8.0;
      } else {
        n.op = ExprOp::feature;
        n.feature = static_cast<VarFeatureId>(rng.below(4));
      }
      expr.nodes.push_back(n);
      return static_cast<int>(expr.nodes.size()) - 1;
    };
    int root = leaf();
    int ops = static_cast<int>(rng.below(8));
    for (int i = 0; i < ops; ++i) {
      HeuristicExpr::Node n;
      n.op = static_cast<ExprOp>(2 + rng.below(7));  // add..neg
      n.lhs = root;
      if (n.op != ExprOp::neg) n.rhs = leaf();
      expr.nodes.push_back(n);
      root = static_cast<int>(expr.nodes.size()) - 1;
    }
    HeuristicExpr reparsed = parse_heuristic_expr(pretty_print(expr));
    REQUIRE(eval(reparsed, sample_features()) ==
            eval(expr, sample_features()));
  }
}
