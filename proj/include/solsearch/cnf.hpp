#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "solsearch/hash.hpp"

namespace solsearch {

// A CNF instance. Clauses are lists of nonzero signed literals; +v means
// variable v true, -v means variable v false. Clause order and literal
// order are preserved exactly through parse/serialize.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// Total assignment over variables 1..num_vars. Index 0 is unused.
struct Assignment {
  std::vector<bool> values;  // size num_vars + 1

  static Assignment all_false(int num_vars) {
    Assignment a;
    a.values.assign(static_cast<std::size_t>(num_vars) + 1, false);
    return a;
  }

  int num_vars() const { return static_cast<int>(values.size()) - 1; }
  bool operator==(const Assignment&) const = default;
};

enum class UnknownReason { timeout, resource_limit, crash, malformed_output };

inline const char* to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::timeout: return "timeout";
    case UnknownReason::resource_limit: return "resource_limit";
    case UnknownReason::crash: return "crash";
    case UnknownReason::malformed_output: return "malformed_output";
  }
  return "?";
}

// Result of asking any solver about a formula: Sat carries a model,
// Unknown carries exactly one reason.
class SolveOutcome {
 public:
  enum class Kind { sat, unsat, unknown };

  static SolveOutcome sat(Assignment model) {
    SolveOutcome o;
    o.kind_ = Kind::sat;
    o.model_ = std::move(model);
    return o;
  }
  static SolveOutcome unsat() {
    SolveOutcome o;
    o.kind_ = Kind::unsat;
    return o;
  }
  static SolveOutcome unknown(UnknownReason reason) {
    SolveOutcome o;
    o.kind_ = Kind::unknown;
    o.reason_ = reason;
    return o;
  }

  Kind kind() const { return kind_; }
  bool is_sat() const { return kind_ == Kind::sat; }
  bool is_unsat() const { return kind_ == Kind::unsat; }
  bool is_unknown() const { return kind_ == Kind::unknown; }
  bool is_decided() const { return kind_ != Kind::unknown; }

  const Assignment& model() const {
    if (!model_) throw std::logic_error("SolveOutcome: no model");
    return *model_;
  }
  UnknownReason reason() const {
    if (kind_ != Kind::unknown)
      throw std::logic_error("SolveOutcome: not unknown");
    return reason_;
  }

 private:
  Kind kind_ = Kind::unknown;
  std::optional<Assignment> model_;
  UnknownReason reason_ = UnknownReason::crash;
};

class DimacsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') ++line;
    ++pos;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' ||
                      peek() == '\n'))
      advance();
  }
  void skip_line() {
    while (!eof() && peek() != '\n') advance();
    if (!eof()) advance();
  }
};

inline long long parse_int_token(Cursor& cur) {
  std::size_t start = cur.pos;
  int line = cur.line;
  bool neg = false;
  if (!cur.eof() && (cur.peek() == '-' || cur.peek() == '+')) {
    neg = cur.peek() == '-';
    cur.advance();
  }
  long long value = 0;
  bool any = false;
  while (!cur.eof() && cur.peek() >= '0' && cur.peek() <= '9') {
    value = value * 10 + (cur.peek() - '0');
    any = true;
    cur.advance();
  }
  if (!any || (!cur.eof() && !std::isspace(static_cast<unsigned char>(cur.peek())))) {
    // Re-slice the offending token for the message.
    std::size_t end = start;
    while (end < cur.text.size() &&
           !std::isspace(static_cast<unsigned char>(cur.text[end])))
      ++end;
    throw DimacsError("line " + std::to_string(line) + ": non-integer token '" +
                      std::string(cur.text.substr(start, end - start)) + "'");
  }
  return neg ? -value : value;
}

}  // namespace detail

// Parses DIMACS CNF text. Comment lines (`c ...`) are skipped anywhere; a
// line starting with `%` ends the instance (the rest of the stream is
// ignored). The header's clause count is advisory: a mismatch produces a
// warning, not an error. A final clause may omit its terminating 0 when
// end-of-input immediately follows the last literal.
inline CnfFormula parse_dimacs(std::string_view text,
                               std::vector<std::string>* warnings = nullptr) {
  detail::Cursor cur{text};
  CnfFormula f;
  long long declared_clauses = -1;

  // Header: comments may precede `p cnf <vars> <clauses>`.
  for (;;) {
    cur.skip_ws();
    if (cur.eof()) throw DimacsError("missing 'p cnf' header");
    char c = cur.peek();
    if (c == 'c') {
      cur.skip_line();
      continue;
    }
    if (c == 'p') {
      std::size_t line_start = cur.pos;
      cur.skip_line();
      std::string_view line =
          text.substr(line_start, cur.pos - line_start);
      // Tokenize the header line.
      std::vector<std::string_view> toks;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() &&
               std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
        std::size_t j = i;
        while (j < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[j])))
          ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
      }
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf")
        throw DimacsError("garbled 'p cnf' header: '" +
                          std::string(line.substr(0, line.find('\n'))) + "'");
      auto to_ll = [&](std::string_view t) -> long long {
        detail::Cursor c2{t};
        long long v = detail::parse_int_token(c2);
        if (!c2.eof()) throw DimacsError("garbled 'p cnf' header");
        return v;
      };
      long long nv = to_ll(toks[2]);
      declared_clauses = to_ll(toks[3]);
      if (nv < 0 || declared_clauses < 0)
        throw DimacsError("garbled 'p cnf' header: negative counts");
      f.num_vars = static_cast<int>(nv);
      break;
    }
    throw DimacsError("line " + std::to_string(cur.line) +
                      ": expected 'p cnf' header, found '" + c + "'");
  }

  std::vector<int> clause;
  bool done = false;
  while (!done) {
    cur.skip_ws();
    if (cur.eof()) break;
    char c = cur.peek();
    if (c == 'c') {
      cur.skip_line();
      continue;
    }
    if (c == '%') {
      done = true;  // SATLIB-style trailer; ignore everything after.
      break;
    }
    long long lit = detail::parse_int_token(cur);
    if (lit == 0) {
      f.clauses.push_back(clause);
      clause.clear();
      continue;
    }
    long long v = lit < 0 ? -lit : lit;
    if (v > f.num_vars)
      throw DimacsError("line " + std::to_string(cur.line) + ": literal " +
                        std::to_string(lit) + " exceeds declared " +
                        std::to_string(f.num_vars) + " variables");
    clause.push_back(static_cast<int>(lit));
  }
  if (!clause.empty()) {
    // Tolerated: last clause unterminated at end of input.
    f.clauses.push_back(clause);
    if (warnings)
      warnings->push_back("final clause not terminated by 0 before end of input");
  }
  if (declared_clauses >= 0 &&
      declared_clauses != static_cast<long long>(f.clauses.size()) && warnings) {
    warnings->push_back("header declares " + std::to_string(declared_clauses) +
                        " clauses but " + std::to_string(f.clauses.size()) +
                        " were read");
  }
  return f;
}

// Emits the exact DIMACS form: header, then one 0-terminated clause per
// line. Byte-stable for a given formula.
inline std::string serialize_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

// True iff every clause contains at least one satisfied literal.
inline bool evaluate(const CnfFormula& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars)
    throw std::invalid_argument(
        "evaluate: assignment covers " + std::to_string(a.num_vars()) +
        " variables, formula has " + std::to_string(f.num_vars));
  for (const auto& clause : f.clauses) {
    bool satisfied = false;
    for (int lit : clause) {
      int v = lit < 0 ? -lit : lit;
      if (a.values[static_cast<std::size_t>(v)] == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

inline constexpr int kBruteForceVarCap = 24;

// Exhaustive oracle. Assignments are enumerated in ascending binary order
// with variable 1 as the least significant bit; returns Sat with the first
// satisfying model, else Unsat. Never returns Unknown.
inline SolveOutcome brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > kBruteForceVarCap)
    throw std::invalid_argument("brute_force_sat: " +
                                std::to_string(f.num_vars) + " variables over cap of " +
                                std::to_string(kBruteForceVarCap));
  const std::uint64_t total = 1ULL << f.num_vars;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (const auto& clause : f.clauses) {
      bool satisfied = false;
      for (int lit : clause) {
        int v = lit < 0 ? -lit : lit;
        bool val = (x >> (v - 1)) & 1;
        if (val == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment model = Assignment::all_false(f.num_vars);
      for (int v = 1; v <= f.num_vars; ++v)
        model.values[static_cast<std::size_t>(v)] = (x >> (v - 1)) & 1;
      return SolveOutcome::sat(std::move(model));
    }
  }
  return SolveOutcome::unsat();
}

// Random k-SAT: m clauses of k distinct variables drawn uniformly without
// replacement (partial Fisher-Yates over 1..n driven by SplitMix64), each
// sign a fair coin. Fully determined by (n, m, k, seed).
inline CnfFormula gen_random_ksat(int n, int m, int k, std::uint64_t seed) {
  if (k > n)
    throw std::invalid_argument("gen_random_ksat: k=" + std::to_string(k) +
                                " exceeds n=" + std::to_string(n));
  if (n < 0 || m < 0 || k < 0)
    throw std::invalid_argument("gen_random_ksat: negative parameter");
  SplitMix64 rng(seed);
  CnfFormula f;
  f.num_vars = n;
  f.clauses.reserve(static_cast<std::size_t>(m));
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int clause_idx = 0; clause_idx < m; ++clause_idx) {
    for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> clause;
    clause.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      std::uint64_t j = i + rng.below(static_cast<std::uint64_t>(n - i));
      std::swap(vars[static_cast<std::size_t>(i)], vars[j]);
      int v = vars[static_cast<std::size_t>(i)];
      clause.push_back(rng.coin() ? v : -v);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

// Pigeonhole principle PHP(p, h): variable (i-1)*h + j means pigeon i sits
// in hole j. One width-h clause per pigeon, then for every hole a binary
// exclusivity clause per pigeon pair; unsatisfiable whenever p > h.
inline CnfFormula gen_pigeonhole(int p, int h) {
  if (p < 1 || h < 1)
    throw std::invalid_argument("gen_pigeonhole: p and h must be >= 1");
  auto var = [h](int pigeon, int hole) { return (pigeon - 1) * h + hole; };
  CnfFormula f;
  f.num_vars = p * h;
  for (int i = 1; i <= p; ++i) {
    std::vector<int> clause;
    clause.reserve(static_cast<std::size_t>(h));
    for (int j = 1; j <= h; ++j) clause.push_back(var(i, j));
    f.clauses.push_back(std::move(clause));
  }
  for (int j = 1; j <= h; ++j)
    for (int i1 = 1; i1 <= p; ++i1)
      for (int i2 = i1 + 1; i2 <= p; ++i2)
        f.clauses.push_back({-var(i1, j), -var(i2, j)});
  return f;
}

}  // namespace solsearch
