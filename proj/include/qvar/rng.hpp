#pragma once

#include <cstdint>
#include <string_view>

#include "qvar/types.hpp"

namespace qvar {

/// Deterministic 64-bit PRNG (splitmix64 state transition). All arithmetic
/// is exact unsigned 64-bit integer math, so sequences are identical on
/// every platform for a given seed:
///
///   state' = state + 0x9E3779B97F4A7C15
///   z = state'; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31; output z
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n). Rejection sampling, so the distribution is
  /// exactly uniform for every n.
  std::uint64_t bounded(std::uint64_t n);

  std::uint64_t state() const { return state_; }

  /// One splitmix64 output step applied to x as if it were the state.
  static std::uint64_t mix(std::uint64_t x) { return SeededRng(x).next(); }

 private:
  std::uint64_t state_;
};

/// FNV-1a over the bytes of s.
std::uint64_t fnv1a64(std::string_view s);

/// Independent per-(query, method) stream:
///   state = mix(global_seed) XOR fnv1a64(qid + '\x1f' + method_name)
/// Distinct (qid, method) pairs collide only if the FNV hashes collide.
SeededRng derive_rng(std::uint64_t global_seed, std::string_view qid, MethodId method);

}  // namespace qvar
