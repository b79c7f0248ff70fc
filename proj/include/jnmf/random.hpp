#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "jnmf/matrix.hpp"

namespace jnmf {

/// Seeded pseudo-random stream used by every stochastic operation.
///
/// The generator is PCG32 (XSH-RR output on a 64-bit LCG state, O'Neill
/// 2014) seeded with `pcg32_srandom(seed, 0xda3e39cb94b95bdb)`. Doubles are
/// built from 53 bits of two consecutive 32-bit outputs (high word first).
/// None of the `<random>` distributions are used, so a seed produces the same
/// numbers on every platform and standard library.
///
/// A stream has a single owner. Independent streams for parallel work are
/// obtained with `derive(index)`, whose seed is
/// `mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15))` with `mix64` the
/// SplitMix64 finalizer. Derivation depends only on the seed, never on how
/// many numbers the parent has already produced.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  RandomSource derive(std::uint64_t index) const noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1).
  double uniform() noexcept;
  /// Uniform on (0, 1].
  double uniform_positive() noexcept { return 1.0 - uniform(); }
  /// Uniform integer on [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);
  /// `count` distinct indices from 0..n-1, returned in increasing order.
  std::vector<std::size_t> sample_sorted(std::size_t n, std::size_t count);

 private:
  std::uint64_t seed_;
  std::uint64_t state_ = 0;
  std::uint64_t increment_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;
/// FNV-1a, used to turn labels into stream indices.
std::uint64_t stable_hash(std::string_view text) noexcept;

/// rows x cols matrix with i.i.d. entries uniform on [0, 1).
Matrix uniform_matrix(std::size_t rows, std::size_t cols, RandomSource& rng);

}  // namespace jnmf
