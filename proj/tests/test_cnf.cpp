#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "solsearch/cnf.hpp"

using namespace solsearch;

TEST_CASE("parse_dimacs reads a plain instance") {
  auto f = parse_dimacs("p cnf 3 2\n1 3 0\n-2 3 0\n");
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, 3});
  CHECK(f.clauses[1] == std::vector<int>{-2, 3});
  CHECK(f == testutil::paper_example_formula());
}

TEST_CASE("parse_dimacs accepts the empty instance") {
  auto f = parse_dimacs("p cnf 0 0\n");
  CHECK(f.num_vars == 0);
  CHECK(f.clauses.empty());
}

TEST_CASE("parse_dimacs skips comments and percent trailers") {
  std::string text =
      "c generated fixture\nc second comment\np cnf 2 2\nc mid comment\n"
      "1 -2 0\n2 0\n%\n0\nignored garbage";
  auto f = parse_dimacs(text);
  CHECK(f.num_vars == 2);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[1] == std::vector<int>{2});
}

TEST_CASE("parse_dimacs tolerates a missing final 0 at end of input") {
  std::vector<std::string> warnings;
  auto f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2", &warnings);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[1] == std::vector<int>{-1, -2});
  REQUIRE_FALSE(warnings.empty());
}

TEST_CASE("parse_dimacs warns on clause-count mismatch but keeps the data") {
  std::vector<std::string> warnings;
  auto f = parse_dimacs("p cnf 2 5\n1 0\n2 0\n", &warnings);
  CHECK(f.clauses.size() == 2);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("declares 5") != std::string::npos);
}

TEST_CASE("parse_dimacs error paths") {
  CHECK_THROWS_AS(parse_dimacs(""), DimacsError);
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), DimacsError);
}

TEST_CASE("serialize_dimacs emits the exact byte form") {
  CHECK(serialize_dimacs(testutil::paper_example_formula()) ==
        "p cnf 3 2\n1 3 0\n-2 3 0\n");
  CnfFormula empty_clause{1, {{}}};
  CHECK(serialize_dimacs(empty_clause) == "p cnf 1 1\n0\n");
}

TEST_CASE("parse/serialize round-trip on 1000 random formulas") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    CnfFormula f = testutil::random_formula(seed);
    std::string text = serialize_dimacs(f);
    CnfFormula g = parse_dimacs(text);
    REQUIRE(g == f);
    // serialize . parse . serialize is the identity on serialized text
    REQUIRE(serialize_dimacs(g) == text);
  }
}

TEST_CASE("evaluate on the worked example") {
  const auto& f = testutil::paper_example_formula();
  Assignment all_true = Assignment::all_false(3);
  all_true.values[1] = all_true.values[2] = all_true.values[3] = true;
  CHECK(evaluate(f, all_true));

  Assignment bad = Assignment::all_false(3);
  bad.values[2] = true;  // v1=0, v2=1, v3=0 falsifies both clauses
  CHECK_FALSE(evaluate(f, bad));
}

TEST_CASE("evaluate edge cases") {
  CnfFormula empty{0, {}};
  CHECK(evaluate(empty, Assignment::all_false(0)));

  CnfFormula with_empty_clause{2, {{1, 2}, {}}};
  for (int bits = 0; bits < 4; ++bits) {
    Assignment a = Assignment::all_false(2);
    a.values[1] = bits & 1;
    a.values[2] = bits & 2;
    CHECK_FALSE(evaluate(with_empty_clause, a));
  }

  CHECK_THROWS_AS(evaluate(testutil::paper_example_formula(),
                           Assignment::all_false(2)),
                  std::invalid_argument);
}

TEST_CASE("brute_force_sat finds models and refutations") {
  auto sat = brute_force_sat(testutil::paper_example_formula());
  REQUIRE(sat.is_sat());
  CHECK(evaluate(testutil::paper_example_formula(), sat.model()));

  CnfFormula conflict{1, {{1}, {-1}}};
  CHECK(brute_force_sat(conflict).is_unsat());

  CHECK(brute_force_sat(gen_pigeonhole(3, 2)).is_unsat());

  CnfFormula too_big{25, {}};
  CHECK_THROWS_AS(brute_force_sat(too_big), std::invalid_argument);
}

TEST_CASE("brute_force_sat enumerates in ascending binary order") {
  // v1 is the least significant bit, so {v1=1, v2=0} comes before {v1=0, v2=1}.
  CnfFormula f{2, {{1, 2}}};
  auto out = brute_force_sat(f);
  REQUIRE(out.is_sat());
  CHECK(out.model().values[1] == true);
  CHECK(out.model().values[2] == false);
}

TEST_CASE("gen_random_ksat is deterministic in its arguments") {
  CHECK(gen_random_ksat(5, 3, 3, 42) == gen_random_ksat(5, 3, 3, 42));
  CHECK(gen_random_ksat(5, 3, 3, 42) != gen_random_ksat(5, 3, 3, 43));
}

TEST_CASE("gen_random_ksat structural properties") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CnfFormula f = gen_random_ksat(12, 30, 3, seed);
    REQUIRE(f.num_vars == 12);
    REQUIRE(f.clauses.size() == 30);
    for (const auto& clause : f.clauses) {
      REQUIRE(clause.size() == 3);
      std::vector<int> vars;
      for (int lit : clause) {
        int v = std::abs(lit);
        REQUIRE(v >= 1);
        REQUIRE(v <= 12);
        for (int seen : vars) REQUIRE(seen != v);
        vars.push_back(v);
      }
    }
  }
  CHECK_THROWS_AS(gen_random_ksat(2, 3, 3, 0), std::invalid_argument);
}

TEST_CASE("random 3-SAT at the threshold ratio is a genuine mix") {
  // n=20, m=85 is ratio ~4.26; across 200 seeds both answers must appear.
  int sat_count = 0;
  const int trials = 200;
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    CnfFormula f = gen_random_ksat(20, 85, 3, seed);
    if (brute_force_sat(f).is_sat()) ++sat_count;
  }
  CHECK(sat_count > 0);
  CHECK(sat_count < trials);
}

TEST_CASE("gen_pigeonhole shape and unsatisfiability") {
  CnfFormula tiny = gen_pigeonhole(2, 1);
  CHECK(tiny.num_vars == 2);
  REQUIRE(tiny.clauses.size() == 3);  // 2 unit pigeon clauses + 1 exclusivity
  CHECK(tiny.clauses[0] == std::vector<int>{1});
  CHECK(tiny.clauses[1] == std::vector<int>{2});
  CHECK(tiny.clauses[2] == std::vector<int>{-1, -2});
  CHECK(brute_force_sat(tiny).is_unsat());

  CnfFormula php32 = gen_pigeonhole(3, 2);
  CHECK(php32.num_vars == 6);
  CHECK(php32.clauses.size() == 9);  // 3 pigeon + 2*C(3,2) exclusivity

  for (int h = 1; h <= 3; ++h)
    CHECK(brute_force_sat(gen_pigeonhole(h + 1, h)).is_unsat());
  // Square instances have the diagonal model.
  CHECK(brute_force_sat(gen_pigeonhole(3, 3)).is_sat());

  CHECK_THROWS_AS(gen_pigeonhole(0, 1), std::invalid_argument);
}
