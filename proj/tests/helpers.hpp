#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "solsearch/cnf.hpp"
#include "solsearch/hash.hpp"

namespace testutil {

namespace fs = std::filesystem;

// Unique scratch directory removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    dir_ = fs::temp_directory_path() /
           ("solsearch_" + tag + "_" + std::to_string(rd()) +
            std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return dir_; }

 private:
  fs::path dir_;
};

inline void write_file(const fs::path& p, const std::string& content) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Structurally random formula for round-trip properties: empty clauses and
// repeated literals allowed on purpose.
inline solsearch::CnfFormula random_formula(std::uint64_t seed) {
  solsearch::SplitMix64 rng(seed);
  solsearch::CnfFormula f;
  f.num_vars = 1 + static_cast<int>(rng.below(30));
  int m = static_cast<int>(rng.below(40));
  for (int i = 0; i < m; ++i) {
    std::vector<int> clause;
    int width = static_cast<int>(rng.below(6));  // 0..5, empties included
    for (int k = 0; k < width; ++k) {
      int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(f.num_vars)));
      clause.push_back(rng.coin() ? v : -v);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

inline const solsearch::CnfFormula& paper_example_formula() {
  // (v1 or v3) and (not v2 or v3)
  static solsearch::CnfFormula f{3, {{1, 3}, {-2, 3}}};
  return f;
}

}  // namespace testutil
