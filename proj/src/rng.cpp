#include "qvar/rng.hpp"

#include <string>

namespace qvar {

std::uint64_t SeededRng::bounded(std::uint64_t n) {
  if (n == 0) return 0;
  // reject draws from the final partial block of 2^64 % n values
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

SeededRng derive_rng(std::uint64_t global_seed, std::string_view qid, MethodId method) {
  std::string key;
  key.reserve(qid.size() + 1 + 16);
  key.append(qid);
  key.push_back('\x1f');
  key.append(to_string(method));
  return SeededRng(SeededRng::mix(global_seed) ^ fnv1a64(key));
}

}  // namespace qvar
