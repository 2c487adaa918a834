#pragma once

#include <cstdint>
#include <random>

namespace qcat {

/// Seeded generator used by every sampler. The helpers below avoid the
/// standard distributions, whose output is implementation-defined, so a seed
/// reproduces the same fixtures across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n), n > 0, by rejection.
inline std::uint64_t uniform_below(Rng& g, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;
  std::uint64_t x;
  do x = g();
  while (x > limit);
  return x % n;
}

inline bool coin(Rng& g, std::uint64_t num = 1, std::uint64_t den = 2) { return uniform_below(g, den) < num; }

}  // namespace qcat
