// Standalone driver for the bundled CDCL solver.
//
// Usage: ref_solver <instance.cnf> [--max-conflicts N] [--time-limit-s X]
//                   [--seed S] [--no-phase-saving] [--restart luby|geometric]
//
// Reads a DIMACS CNF file, prints statistics as `c` comment lines and the
// answer in SAT-competition form: an `s` status line plus `v` model lines
// for satisfiable instances. Exit codes: 10 SAT, 20 UNSAT, 0 unknown,
// 1 usage or input error.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "solver_core.hpp"

namespace {

struct ParsedCnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// Minimal DIMACS reader: `c` comments skipped, `%` ends the instance,
// clauses are 0-terminated integer runs. Trusts well-formed inputs apart
// from basic structural checks.
bool read_dimacs(const std::string& path, ParsedCnf& out, std::string& err) {
  std::ifstream in(path);
  if (!in) {
    err = "cannot open '" + path + "'";
    return false;
  }
  std::string tok;
  bool have_header = false;
  std::vector<int> clause;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (!tok.empty() && tok[0] == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      long long nv = 0, nc = 0;
      if (!(in >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0) {
        err = "garbled 'p cnf' header";
        return false;
      }
      out.num_vars = static_cast<int>(nv);
      have_header = true;
      continue;
    }
    long long lit;
    try {
      std::size_t used = 0;
      lit = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      err = "non-integer token '" + tok + "'";
      return false;
    }
    if (!have_header) {
      err = "literal before 'p cnf' header";
      return false;
    }
    if (lit == 0) {
      out.clauses.push_back(clause);
      clause.clear();
    } else {
      if (lit > out.num_vars || -lit > out.num_vars) {
        err = "literal " + tok + " out of range";
        return false;
      }
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (!have_header) {
    err = "missing 'p cnf' header";
    return false;
  }
  if (!clause.empty()) out.clauses.push_back(clause);
  return true;
}

void print_model(const std::vector<bool>& model, int num_vars) {
  std::string line = "v";
  for (int v = 1; v <= num_vars; ++v) {
    line += ' ';
    if (!model[static_cast<std::size_t>(v)]) line += '-';
    line += std::to_string(v);
    if (line.size() > 72) {
      std::puts(line.c_str());
      line = "v";
    }
  }
  line += " 0";
  std::puts(line.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string instance;
  solsearch::SolveBudget budget;
  solsearch::CdclConfig cfg;
  std::uint64_t seed = 0;

  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto need_value = [&](const char* flag) -> const char* {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "missing value for %s\n", flag);
        std::exit(1);
      }
      return argv[++i];
    };
    if (arg == "--max-conflicts") {
      budget.max_conflicts = std::atoll(need_value("--max-conflicts"));
    } else if (arg == "--time-limit-s") {
      budget.max_wall_s = std::atof(need_value("--time-limit-s"));
    } else if (arg == "--seed") {
      seed = static_cast<std::uint64_t>(std::atoll(need_value("--seed")));
    } else if (arg == "--no-phase-saving") {
      cfg.phase_saving = false;
    } else if (arg == "--restart") {
      std::string kind = need_value("--restart");
      cfg.restart.kind = kind == "geometric" ? solsearch::RestartKind::geometric
                                             : solsearch::RestartKind::luby;
    } else if (!arg.empty() && arg[0] == '-') {
      std::fprintf(stderr, "unknown flag '%s'\n", arg.c_str());
      return 1;
    } else if (instance.empty()) {
      instance = arg;
    } else {
      std::fprintf(stderr, "unexpected argument '%s'\n", arg.c_str());
      return 1;
    }
  }
  if (instance.empty()) {
    std::fprintf(stderr,
                 "usage: ref_solver <instance.cnf> [--max-conflicts N] "
                 "[--time-limit-s X] [--seed S]\n");
    return 1;
  }

  ParsedCnf cnf;
  std::string err;
  if (!read_dimacs(instance, cnf, err)) {
    std::fprintf(stderr, "error: %s\n", err.c_str());
    return 1;
  }
  std::printf("c ref_solver: %d vars, %zu clauses\n", cnf.num_vars,
              cnf.clauses.size());

  solsearch::CdclSolver solver(cnf.num_vars, cnf.clauses, cfg, seed);
  solsearch::CdclResult result = solver.solve(budget);

  const auto& st = result.stats;
  std::printf("c conflicts %lld\n", static_cast<long long>(st.conflicts));
  std::printf("c decisions %lld\n", static_cast<long long>(st.decisions));
  std::printf("c propagations %lld\n", static_cast<long long>(st.propagations));
  std::printf("c restarts %lld\n", static_cast<long long>(st.restarts));
  std::printf("c learned_clauses %lld\n",
              static_cast<long long>(st.learned_clauses));
  std::printf("c wall_time_s %.6f\n", st.wall_time_s);

  switch (result.answer) {
    case solsearch::SolverAnswer::sat:
      std::puts("s SATISFIABLE");
      print_model(result.model, cnf.num_vars);
      std::fflush(stdout);
      return 10;
    case solsearch::SolverAnswer::unsat:
      std::puts("s UNSATISFIABLE");
      std::fflush(stdout);
      return 20;
    case solsearch::SolverAnswer::unknown:
      std::puts("s UNKNOWN");
      std::fflush(stdout);
      return 0;
  }
  return 0;
}
