#include "jnmf/random.hpp"

#include <algorithm>
#include <string>

#include "jnmf/error.hpp"

namespace jnmf {

namespace {

constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
constexpr std::uint64_t kStream = 0xda3e39cb94b95bdbULL;
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t stable_hash(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RandomSource::RandomSource(std::uint64_t seed) noexcept : seed_(seed) {
  increment_ = (kStream << 1u) | 1u;
  next_u32();
  state_ += seed;
  next_u32();
}

RandomSource RandomSource::derive(std::uint64_t index) const noexcept {
  return RandomSource(mix64(seed_ ^ mix64(index + kGolden)));
}

std::uint32_t RandomSource::next_u32() noexcept {
  const std::uint64_t old = state_;
  state_ = old * kMultiplier + increment_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RandomSource::next_u64() noexcept {
  const std::uint64_t hi = next_u32();
  return (hi << 32u) | next_u32();
}

double RandomSource::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53;
}

std::uint64_t RandomSource::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("uniform_index: bound must be positive");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= limit) return r % bound;
  }
}

std::vector<std::size_t> RandomSource::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

std::vector<std::size_t> RandomSource::sample_sorted(std::size_t n, std::size_t count) {
  if (count > n) {
    throw ValidationError("cannot sample " + std::to_string(count) + " of " + std::to_string(n) +
                          " items without replacement");
  }
  // Partial Fisher-Yates over the first `count` slots.
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_index(n - i));
    std::swap(p[i], p[j]);
  }
  p.resize(count);
  std::sort(p.begin(), p.end());
  return p;
}

Matrix uniform_matrix(std::size_t rows, std::size_t cols, RandomSource& rng) {
  Matrix out(rows, cols);
  for (double& v : out.values()) v = rng.uniform();
  return out;
}

}  // namespace jnmf
