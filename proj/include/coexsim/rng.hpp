#pragma once

#include <cstdint>
#include <random>

namespace coexsim {

using Rng = std::mt19937_64;

// Independent stream purposes. Each (seed, purpose, index) triple maps to its
// own generator so adding nodes never perturbs another node's draws.
enum class Stream : std::uint64_t {
  Deployment = 1,
  Shadowing = 2,
  Traffic = 3,
  Backoff = 4,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, Stream purpose, std::uint64_t index = 0) {
  return splitmix64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(purpose))) + index);
}

inline Rng make_rng(std::uint64_t seed, Stream purpose, std::uint64_t index = 0) {
  return Rng(derive_seed(seed, purpose, index));
}

}  // namespace coexsim
