#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace solsearch {

// 64-bit FNV-1a. Content hashes throughout the project (candidate ids,
// prompt hashes, tree hashes, cache keys) are FNV-1a over the exact bytes,
// rendered as 16 lowercase hex digits.
inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                       std::uint64_t h = kFnvOffsetBasis) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

inline std::string hex16(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

inline std::string content_hash(std::string_view bytes) {
  return hex16(fnv1a64(bytes));
}

// SplitMix64 (Steele & Vigna). The one PRNG used by every seeded component;
// pure 64-bit arithmetic, so streams are bit-identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound). Plain modulo reduction: the bias at 2^64
  // scale is irrelevant here and the results stay reproducible everywhere.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool coin() { return next() & 1; }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace solsearch
