#pragma once

// Library face of the bundled CDCL solver. The implementation lives in the
// solver package tree (packages/ref_solver/solver_core.hpp) because that is
// the unit the patcher copies, splices, and rebuilds; this header adapts it
// to the CNF model and the expression-based heuristic override.

#include <optional>
#include <stdexcept>
#include <utility>

#include "../../packages/ref_solver/solver_core.hpp"
#include "solsearch/cnf.hpp"
#include "solsearch/heuristic_expr.hpp"

namespace solsearch {

struct HeuristicConfig {
  double bump_amount = 1.0;
  double decay_factor = 0.95;
  double rescale_threshold = 1e100;
  RestartPolicy restart_policy;
  bool phase_saving = true;
  std::optional<HeuristicExpr> score_expr;  // overrides VSIDS ordering
};

inline void validate(const HeuristicConfig& cfg) {
  if (cfg.bump_amount <= 0.0)
    throw std::invalid_argument("bump_amount must be positive");
  if (cfg.decay_factor <= 0.0 || cfg.decay_factor >= 1.0)
    throw std::invalid_argument("decay_factor must be in (0,1)");
  if (cfg.rescale_threshold <= cfg.bump_amount)
    throw std::invalid_argument("rescale_threshold must exceed bump_amount");
  if (cfg.restart_policy.base < 1.0)
    throw std::invalid_argument("restart base must be >= 1");
  if (cfg.restart_policy.kind == RestartKind::geometric &&
      cfg.restart_policy.factor <= 1.0)
    throw std::invalid_argument("geometric restart factor must exceed 1");
}

inline CdclConfig to_cdcl_config(const HeuristicConfig& cfg,
                                 bool record_learned = false) {
  validate(cfg);
  CdclConfig c;
  c.bump_amount = cfg.bump_amount;
  c.decay_factor = cfg.decay_factor;
  c.rescale_threshold = cfg.rescale_threshold;
  c.restart = cfg.restart_policy;
  c.phase_saving = cfg.phase_saving;
  c.record_learned = record_learned;
  if (cfg.score_expr) {
    c.score_override = [expr = *cfg.score_expr](const VarFeatures& f) {
      return eval(expr, f);
    };
  }
  return c;
}

inline CdclSolver make_solver(const CnfFormula& f,
                              const HeuristicConfig& cfg = {},
                              std::uint64_t seed = 0,
                              bool record_learned = false) {
  return CdclSolver(f.num_vars, f.clauses, to_cdcl_config(cfg, record_learned),
                    seed);
}

// Complete in-process solve. Identical (formula, config, conflict budget,
// seed) inputs give identical outcomes and stats; budget exhaustion maps to
// Unknown(timeout).
inline std::pair<SolveOutcome, SolverStats> solve(const CnfFormula& f,
                                                  const HeuristicConfig& cfg,
                                                  const SolveBudget& budget,
                                                  std::uint64_t seed = 0) {
  if (budget.max_conflicts && *budget.max_conflicts <= 0)
    throw std::invalid_argument("conflict budget must be positive");
  if (budget.max_wall_s && *budget.max_wall_s <= 0.0)
    throw std::invalid_argument("wall budget must be positive");
  CdclSolver solver = make_solver(f, cfg, seed);
  CdclResult result = solver.solve(budget);
  switch (result.answer) {
    case SolverAnswer::sat: {
      Assignment model = Assignment::all_false(f.num_vars);
      for (int v = 1; v <= f.num_vars; ++v)
        model.values[static_cast<std::size_t>(v)] =
            result.model[static_cast<std::size_t>(v)];
      return {SolveOutcome::sat(std::move(model)), result.stats};
    }
    case SolverAnswer::unsat:
      return {SolveOutcome::unsat(), result.stats};
    case SolverAnswer::unknown:
    default:
      return {SolveOutcome::unknown(UnknownReason::timeout), result.stats};
  }
}

}  // namespace solsearch
