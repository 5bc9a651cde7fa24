#pragma once

// Seeding discipline: every randomized routine takes an explicit 64-bit seed,
// and anything that fans out (lattice points, sample batches, retry slots)
// derives one child seed per unit of work. Results are then reproducible and
// independent of evaluation order.

#include <cstdint>
#include <random>

namespace tautilt {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; the standard 64-bit mix.
[[nodiscard]] inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Child seed for work unit `index` under `root`. Stable across platforms.
[[nodiscard]] inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root ^ mix64(index + 1));
}

[[nodiscard]] inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace tautilt
