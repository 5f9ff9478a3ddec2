#pragma once

// Self-contained CDCL solver: two-watched-literal propagation, 1-UIP
// conflict analysis, VSIDS decisions over an indexed max-heap, phase
// saving, Luby restarts, and activity-capped learned-clause deletion.
//
// The heuristic hot-spots are delimited by SOLSEARCH marker lines so the
// surrounding tooling can splice replacement implementations in place and
// rebuild. Everything this header needs is in the standard library; it must
// stay compilable on its own inside a copied source tree.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

namespace solsearch {

struct SolverStats {
  std::int64_t conflicts = 0;
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;
  std::int64_t restarts = 0;
  std::int64_t learned_clauses = 0;
  double wall_time_s = 0.0;
};

enum class RestartKind { luby, geometric };

struct RestartPolicy {
  RestartKind kind = RestartKind::luby;
  double base = 64.0;    // conflicts per restart unit
  double factor = 1.5;   // geometric growth only
};

// Per-variable view handed to interpreted scoring heuristics.
struct VarFeatures {
  double activity = 0.0;
  double saved_phase = 0.0;
  double conflicts_since_last_bump = 0.0;
  double var_index = 0.0;
};

struct CdclConfig {
  double bump_amount = 1.0;
  double decay_factor = 0.95;
  double rescale_threshold = 1e100;
  RestartPolicy restart;
  bool phase_saving = true;
  // When set, decisions pick the unassigned variable maximizing this score
  // (ties to the lowest index) instead of raw VSIDS activity.
  std::function<double(const VarFeatures&)> score_override;
  bool record_learned = false;  // keep a log of learned clauses
};

struct SolveBudget {
  std::optional<std::int64_t> max_conflicts;
  std::optional<double> max_wall_s;
};

enum class SolverAnswer { sat, unsat, unknown };

struct CdclResult {
  SolverAnswer answer = SolverAnswer::unknown;
  std::vector<bool> model;  // 1-based, size num_vars+1; valid when sat
  SolverStats stats;
};

// Indexed binary max-heap over variable indices, ordered by activity with
// ties to the lowest index. Rescaling all activities by one positive factor
// preserves the order, so rescales need no heap repair.
class VarOrderHeap {
 public:
  void init(int num_vars, const std::vector<double>* activity) {
    act_ = activity;
    heap_.clear();
    pos_.assign(static_cast<std::size_t>(num_vars) + 1, -1);
    for (int v = 1; v <= num_vars; ++v) insert(v);
  }

  bool contains(int v) const {
    return static_cast<std::size_t>(v) < pos_.size() &&
           pos_[static_cast<std::size_t>(v)] >= 0;
  }
  bool empty() const { return heap_.empty(); }
  int top() const { return heap_[0]; }

  void insert(int v) {
    if (contains(v)) return;
    pos_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(static_cast<int>(heap_.size()) - 1);
  }

  void pop_top() {
    int top_var = heap_[0];
    pos_[static_cast<std::size_t>(top_var)] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      pos_[static_cast<std::size_t>(last)] = 0;
      sift_down(0);
    }
  }

  // Activity of v increased: restore the heap order.
  void increased(int v) { sift_up(pos_[static_cast<std::size_t>(v)]); }

 private:
  bool before(int a, int b) const {
    double aa = (*act_)[static_cast<std::size_t>(a)];
    double ab = (*act_)[static_cast<std::size_t>(b)];
    return aa > ab || (aa == ab && a < b);
  }

  void sift_up(int i) {
    int v = heap_[static_cast<std::size_t>(i)];
    while (i > 0) {
      int parent = (i - 1) >> 1;
      if (!before(v, heap_[static_cast<std::size_t>(parent)])) break;
      place(heap_[static_cast<std::size_t>(parent)], i);
      i = parent;
    }
    place(v, i);
  }

  void sift_down(int i) {
    int v = heap_[static_cast<std::size_t>(i)];
    int n = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && before(heap_[static_cast<std::size_t>(child + 1)],
                                  heap_[static_cast<std::size_t>(child)]))
        ++child;
      if (!before(heap_[static_cast<std::size_t>(child)], v)) break;
      place(heap_[static_cast<std::size_t>(child)], i);
      i = child;
    }
    place(v, i);
  }

  void place(int v, int i) {
    heap_[static_cast<std::size_t>(i)] = v;
    pos_[static_cast<std::size_t>(v)] = i;
  }

  std::vector<int> heap_;
  std::vector<int> pos_;
  const std::vector<double>* act_ = nullptr;
};

class CdclSolver {
 public:
  CdclSolver(int num_vars, const std::vector<std::vector<int>>& clauses,
             CdclConfig cfg = {}, std::uint64_t seed = 0)
      : num_vars_(num_vars), cfg_(std::move(cfg)) {
    std::size_t n = static_cast<std::size_t>(num_vars_) + 1;
    assign_.assign(n, 0);
    level_.assign(n, 0);
    reason_.assign(n, -1);
    seen_.assign(n, 0);
    activity_.assign(n, 0.0);
    saved_phase_.assign(n, 0);
    last_bump_conflict_.assign(n, 0);
    watches_.assign(2 * n, {});
    bump_amount_ = cfg_.bump_amount;
    if (seed != 0) {
      // Seeded initial polarities (SplitMix64 bits); with phase saving on
      // they only steer the first visit to each variable.
      std::uint64_t s = seed;
      for (int v = 1; v <= num_vars_; ++v) {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        saved_phase_[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>((z ^ (z >> 31)) & 1);
      }
    }
    if (!cfg_.score_override) order_heap_.init(num_vars_, &activity_);
    for (const auto& lits : clauses) add_input_clause(lits);
    learned_cap_ = std::max<std::int64_t>(
        4000, 2 * static_cast<std::int64_t>(clauses.size()));
  }

  CdclResult solve(const SolveBudget& budget) {
    auto started = std::chrono::steady_clock::now();
    CdclResult result;
    auto finish = [&](SolverAnswer ans) {
      stats_.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        started)
              .count();
      result.answer = ans;
      result.stats = stats_;
      return result;
    };
    auto wall_exceeded = [&] {
      if (!budget.max_wall_s) return false;
      double elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started)
                           .count();
      return elapsed >= *budget.max_wall_s;
    };

    if (!ok_) return finish(SolverAnswer::unsat);

    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++stats_.conflicts;
        ++conflicts_since_restart_;
        if (decision_level() == 0) return finish(SolverAnswer::unsat);
        std::vector<int> learnt;
        int back_level = analyze(confl, learnt);
        backtrack(back_level);
        attach_learnt(learnt);
        decay_activities();
        cla_inc_ *= 1.0 / kClauseDecay;
        if (live_learned_ > learned_cap_) reduce_learned_db();
        if (budget.max_conflicts && stats_.conflicts >= *budget.max_conflicts) {
          backtrack(0);
          return finish(SolverAnswer::unknown);
        }
        if ((stats_.conflicts & 63) == 0 && wall_exceeded()) {
          backtrack(0);
          return finish(SolverAnswer::unknown);
        }
      } else {
        if (decision_level() > 0 &&
            conflicts_since_restart_ >= restart_interval()) {
          ++stats_.restarts;
          conflicts_since_restart_ = 0;
          backtrack(0);
          continue;
        }
        if ((stats_.decisions & 255) == 0 && wall_exceeded()) {
          backtrack(0);
          return finish(SolverAnswer::unknown);
        }
        std::optional<int> next = decide_next();
        if (!next) {
          result.model.assign(static_cast<std::size_t>(num_vars_) + 1, false);
          for (int v = 1; v <= num_vars_; ++v)
            result.model[static_cast<std::size_t>(v)] =
                assign_[static_cast<std::size_t>(v)] > 0;
          return finish(SolverAnswer::sat);
        }
        ++stats_.decisions;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        int v = *next;
        enqueue_assign(pick_phase(v) ? v : -v, -1);
      }
    }
  }

  // Heuristic hot-spots; defined out of class between SOLSEARCH markers.
  void inc_activity(int v);
  void decay_activities();
  std::int64_t restart_interval() const;
  bool pick_phase(int v) const;

  // Highest-score unassigned variable (activity, or the score override when
  // configured); ties break to the lowest index. Pops stale heap entries but
  // never changes assignments.
  std::optional<int> decide_next() {
    if (cfg_.score_override) {
      std::optional<int> best;
      double best_score = 0.0;
      for (int v = 1; v <= num_vars_; ++v) {
        if (assign_[static_cast<std::size_t>(v)] != 0) continue;
        double score = cfg_.score_override(features(v));
        if (!best || score > best_score) {
          best = v;
          best_score = score;
        }
      }
      return best;
    }
    while (!order_heap_.empty() &&
           assign_[static_cast<std::size_t>(order_heap_.top())] != 0)
      order_heap_.pop_top();
    if (order_heap_.empty()) return std::nullopt;
    return order_heap_.top();
  }

  int num_vars() const { return num_vars_; }
  double activity(int v) const { return activity_[static_cast<std::size_t>(v)]; }
  // +1 true, -1 false, 0 unassigned.
  int value(int v) const { return assign_[static_cast<std::size_t>(v)]; }
  bool saved_phase(int v) const { return saved_phase_[static_cast<std::size_t>(v)] != 0; }
  const SolverStats& stats() const { return stats_; }
  const std::vector<std::vector<int>>& learned_log() const { return learned_log_; }
  bool consistent() const { return ok_; }

  VarFeatures features(int v) const {
    VarFeatures f;
    f.activity = activity_[static_cast<std::size_t>(v)];
    f.saved_phase = saved_phase_[static_cast<std::size_t>(v)] ? 1.0 : 0.0;
    f.conflicts_since_last_bump = static_cast<double>(
        stats_.conflicts - last_bump_conflict_[static_cast<std::size_t>(v)]);
    f.var_index = static_cast<double>(v);
    return f;
  }

  // Root-level propagation to fixpoint; false when it hits a conflict.
  bool propagate_to_fixpoint() {
    if (!ok_) return false;
    if (propagate() >= 0) {
      if (decision_level() == 0) ok_ = false;
      return false;
    }
    return true;
  }

  // No live clause may sit with all-but-one literals false and the last one
  // unassigned after a propagation fixpoint; exposed for direct assertion.
  bool propagation_complete() const {
    for (const auto& c : clauses_) {
      if (c.dead) continue;
      int unassigned = 0;
      bool satisfied = false;
      for (int lit : c.lits) {
        int val = value_lit(lit);
        if (val > 0) {
          satisfied = true;
          break;
        }
        if (val == 0) ++unassigned;
      }
      if (!satisfied && unassigned == 1) return false;
    }
    return true;
  }

  static double luby(double y, int x) {
    int size = 1, seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return std::pow(y, seq);
  }

 private:
  struct Clause {
    std::vector<int> lits;
    double activity = 0.0;
    bool learned = false;
    bool dead = false;
  };

  static constexpr double kClauseDecay = 0.999;
  static constexpr double kClauseRescale = 1e20;

  static std::size_t lit_code(int lit) {
    int v = lit < 0 ? -lit : lit;
    return 2 * static_cast<std::size_t>(v) + (lit < 0 ? 1 : 0);
  }

  int value_lit(int lit) const {
    int a = assign_[static_cast<std::size_t>(lit < 0 ? -lit : lit)];
    return lit < 0 ? -a : a;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  // Root-level clause ingestion: duplicate literals dropped, tautologies
  // skipped, literals already false at level 0 removed. Keeps the watch
  // invariant intact even when earlier units already assigned variables.
  void add_input_clause(const std::vector<int>& input) {
    if (!ok_) return;
    std::vector<int> lits;
    for (int lit : input) {
      bool dup = false;
      for (int other : lits) {
        if (other == lit) dup = true;
        if (other == -lit) return;  // tautology, always satisfied
      }
      if (dup) continue;
      int val = value_lit(lit);
      if (val > 0) return;  // satisfied at root already
      if (val == 0) lits.push_back(lit);
    }
    if (lits.empty()) {
      ok_ = false;
      return;
    }
    if (lits.size() == 1) {
      enqueue_assign(lits[0], -1);
      if (propagate() >= 0) ok_ = false;
      return;
    }
    attach_clause(std::move(lits), false);
  }

  int attach_clause(std::vector<int> lits, bool learned) {
    int idx = static_cast<int>(clauses_.size());
    watches_[lit_code(lits[0])].push_back(idx);
    watches_[lit_code(lits[1])].push_back(idx);
    clauses_.push_back(Clause{std::move(lits), cla_inc_, learned, false});
    if (learned) {
      ++stats_.learned_clauses;
      ++live_learned_;
    }
    return idx;
  }

  void enqueue_assign(int lit, int reason) {
    int v = lit < 0 ? -lit : lit;
    assign_[static_cast<std::size_t>(v)] = lit < 0 ? -1 : 1;
    level_[static_cast<std::size_t>(v)] = decision_level();
    reason_[static_cast<std::size_t>(v)] = reason;
    trail_.push_back(lit);
  }

  // Two-watched-literal propagation. Returns the conflicting clause index,
  // or -1 once the fixpoint is reached.
  int propagate() {
    while (prop_head_ < trail_.size()) {
      int p = trail_[prop_head_++];
      ++stats_.propagations;
      int false_lit = -p;
      auto& wl = watches_[lit_code(false_lit)];
      std::size_t i = 0, j = 0;
      while (i < wl.size()) {
        int ci = wl[i];
        Clause& c = clauses_[static_cast<std::size_t>(ci)];
        auto& lits = c.lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        // Invariant: lits[1] is the falsified watch from here on.
        if (value_lit(lits[0]) > 0) {
          wl[j++] = wl[i++];
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value_lit(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches_[lit_code(lits[1])].push_back(ci);
            moved = true;
            ++i;
            break;
          }
        }
        if (moved) continue;
        wl[j++] = wl[i++];
        if (value_lit(lits[0]) < 0) {
          while (i < wl.size()) wl[j++] = wl[i++];
          wl.resize(j);
          return ci;
        }
        enqueue_assign(lits[0], ci);
      }
      wl.resize(j);
    }
    return -1;
  }

  // 1-UIP conflict analysis. Fills `learnt` with the asserting literal at
  // position 0 and returns the backtrack level.
  int analyze(int confl, std::vector<int>& learnt) {
    learnt.clear();
    learnt.push_back(0);  // placeholder for the asserting literal
    int path_count = 0;
    int p = 0;  // 0 = conflict clause itself
    std::size_t index = trail_.size();

    int clause_idx = confl;
    do {
      Clause& c = clauses_[static_cast<std::size_t>(clause_idx)];
      if (c.learned) bump_clause(c);
      for (std::size_t k = (p == 0 ? 0 : 1); k < c.lits.size(); ++k) {
        int q = c.lits[k];
        int v = q < 0 ? -q : q;
        if (!seen_[static_cast<std::size_t>(v)] &&
            level_[static_cast<std::size_t>(v)] > 0) {
          seen_[static_cast<std::size_t>(v)] = 1;
          inc_activity(v);
          if (level_[static_cast<std::size_t>(v)] >= decision_level())
            ++path_count;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[static_cast<std::size_t>(std::abs(trail_[index - 1]))])
        --index;
      --index;
      p = trail_[index];
      int pv = p < 0 ? -p : p;
      seen_[static_cast<std::size_t>(pv)] = 0;
      clause_idx = reason_[static_cast<std::size_t>(pv)];
      --path_count;
    } while (path_count > 0);
    learnt[0] = -p;

    for (std::size_t k = 1; k < learnt.size(); ++k)
      seen_[static_cast<std::size_t>(std::abs(learnt[k]))] = 0;

    if (learnt.size() == 1) return 0;
    // Second-highest decision level; its literal moves to the watch slot.
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[static_cast<std::size_t>(std::abs(learnt[k]))] >
          level_[static_cast<std::size_t>(std::abs(learnt[max_i]))])
        max_i = k;
    }
    std::swap(learnt[1], learnt[max_i]);
    return level_[static_cast<std::size_t>(std::abs(learnt[1]))];
  }

  void attach_learnt(const std::vector<int>& learnt) {
    if (cfg_.record_learned) learned_log_.push_back(learnt);
    if (learnt.size() == 1) {
      enqueue_assign(learnt[0], -1);
      ++stats_.learned_clauses;
      return;
    }
    int idx = attach_clause(learnt, true);
    enqueue_assign(learnt[0], idx);
  }

  void bump_clause(Clause& c) {
    c.activity += cla_inc_;
    if (c.activity > kClauseRescale) {
      for (auto& cl : clauses_)
        if (cl.learned && !cl.dead) cl.activity /= kClauseRescale;
      cla_inc_ /= kClauseRescale;
    }
  }

  void backtrack(int target_level) {
    if (decision_level() <= target_level) return;
    std::size_t keep = static_cast<std::size_t>(
        trail_lim_[static_cast<std::size_t>(target_level)]);
    for (std::size_t i = trail_.size(); i-- > keep;) {
      int lit = trail_[i];
      int v = lit < 0 ? -lit : lit;
      saved_phase_[static_cast<std::size_t>(v)] = lit > 0 ? 1 : 0;
      assign_[static_cast<std::size_t>(v)] = 0;
      reason_[static_cast<std::size_t>(v)] = -1;
      if (!cfg_.score_override && !order_heap_.contains(v))
        order_heap_.insert(v);
    }
    trail_.resize(keep);
    trail_lim_.resize(static_cast<std::size_t>(target_level));
    prop_head_ = keep;
  }

  // Evict the lowest-activity learned clauses once the database exceeds its
  // cap. Binary clauses and clauses currently acting as reasons stay.
  void reduce_learned_db() {
    std::vector<int> candidates;
    for (int i = 0; i < static_cast<int>(clauses_.size()); ++i) {
      const Clause& c = clauses_[static_cast<std::size_t>(i)];
      if (!c.learned || c.dead || c.lits.size() <= 2) continue;
      if (is_reason(i)) continue;
      candidates.push_back(i);
    }
    std::int64_t excess = live_learned_ - learned_cap_ / 2;
    if (excess <= 0) return;
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return clauses_[static_cast<std::size_t>(a)].activity <
             clauses_[static_cast<std::size_t>(b)].activity;
    });
    for (int idx : candidates) {
      if (excess <= 0) break;
      detach_clause(idx);
      --excess;
    }
  }

  bool is_reason(int clause_idx) const {
    const Clause& c = clauses_[static_cast<std::size_t>(clause_idx)];
    int v = c.lits[0] < 0 ? -c.lits[0] : c.lits[0];
    return assign_[static_cast<std::size_t>(v)] != 0 &&
           reason_[static_cast<std::size_t>(v)] == clause_idx;
  }

  void detach_clause(int idx) {
    Clause& c = clauses_[static_cast<std::size_t>(idx)];
    for (int w = 0; w < 2; ++w) {
      auto& wl = watches_[lit_code(c.lits[static_cast<std::size_t>(w)])];
      wl.erase(std::remove(wl.begin(), wl.end(), idx), wl.end());
    }
    c.dead = true;
    c.lits.clear();
    c.lits.shrink_to_fit();
    --live_learned_;
  }

  int num_vars_;
  CdclConfig cfg_;
  bool ok_ = true;

  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t prop_head_ = 0;

  std::vector<double> activity_;
  double bump_amount_ = 1.0;
  std::vector<std::uint8_t> saved_phase_;
  std::vector<std::int64_t> last_bump_conflict_;
  VarOrderHeap order_heap_;

  double cla_inc_ = 1.0;
  std::int64_t learned_cap_ = 4000;
  std::int64_t live_learned_ = 0;
  std::int64_t conflicts_since_restart_ = 0;

  SolverStats stats_;
  std::vector<std::vector<int>> learned_log_;
};

// SOLSEARCH:BEGIN inc_activity
inline void CdclSolver::inc_activity(int v) {
  activity_[v] += bump_amount_;
  last_bump_conflict_[v] = stats_.conflicts;
  if (activity_[v] > cfg_.rescale_threshold) {
    const double inv = 1.0 / cfg_.rescale_threshold;
    for (int u = 1; u <= num_vars_; ++u) activity_[u] *= inv;
    bump_amount_ *= inv;
  }
  if (order_heap_.contains(v)) order_heap_.increased(v);
}
// SOLSEARCH:END inc_activity

// SOLSEARCH:BEGIN decay
inline void CdclSolver::decay_activities() {
  // Growing the increment instead of shrinking every activity keeps the
  // per-conflict decay O(1); the rescale in inc_activity bounds magnitudes.
  bump_amount_ *= 1.0 / cfg_.decay_factor;
}
// SOLSEARCH:END decay

// SOLSEARCH:BEGIN restart_policy
inline std::int64_t CdclSolver::restart_interval() const {
  const RestartPolicy& rp = cfg_.restart;
  if (rp.kind == RestartKind::geometric) {
    double limit = rp.base * std::pow(rp.factor, static_cast<double>(stats_.restarts));
    return static_cast<std::int64_t>(limit);
  }
  return static_cast<std::int64_t>(luby(2.0, static_cast<int>(stats_.restarts)) * rp.base);
}
// SOLSEARCH:END restart_policy

// SOLSEARCH:BEGIN phase_selection
inline bool CdclSolver::pick_phase(int v) const {
  if (cfg_.phase_saving) return saved_phase_[v] != 0;
  return false;
}
// SOLSEARCH:END phase_selection

}  // namespace solsearch
