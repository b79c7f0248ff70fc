#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "jnmf/error.hpp"
#include "jnmf/random.hpp"

using jnmf::RandomSource;

TEST_CASE("same seed, same stream") {
  RandomSource a(7), b(7), c(8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    differs = differs || x != c.next_u64();
  }
  CHECK(differs);
}

TEST_CASE("derive depends only on the seed") {
  RandomSource parent(99);
  const RandomSource d1 = parent.derive(3);
  for (int i = 0; i < 10; ++i) parent.next_u32();
  const RandomSource d2 = parent.derive(3);
  CHECK(d1.seed() == d2.seed());
  CHECK(d1.seed() == jnmf::mix64(99 ^ jnmf::mix64(3 + 0x9e3779b97f4a7c15ULL)));
  CHECK(parent.derive(4).seed() != d1.seed());
}

TEST_CASE("mix64 and stable_hash") {
  // SplitMix64 finalizer of 0 and FNV-1a reference values.
  CHECK(jnmf::mix64(0) == 0);
  CHECK(jnmf::stable_hash("") == 0xcbf29ce484222325ULL);
  CHECK(jnmf::stable_hash("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(jnmf::stable_hash("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("uniform ranges") {
  RandomSource rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    const double p = rng.uniform_positive();
    CHECK((p > 0.0 && p <= 1.0));
  }
  CHECK_THROWS_AS(rng.uniform_index(0), jnmf::ValidationError);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) ++hits[rng.uniform_index(5)];
  for (int h : hits) CHECK((h > 850 && h < 1150));
}

TEST_CASE("uniform_matrix") {
  RandomSource a(7), b(7);
  CHECK(jnmf::uniform_matrix(2, 2, a) == jnmf::uniform_matrix(2, 2, b));
  RandomSource big(123);
  const auto m = jnmf::uniform_matrix(1000, 1000, big);
  const double mu = jnmf::mean(m);
  CHECK((mu > 0.49 && mu < 0.51));
  CHECK(*std::min_element(m.values().begin(), m.values().end()) >= 0.0);
  CHECK(*std::max_element(m.values().begin(), m.values().end()) < 1.0);
  CHECK_THROWS_AS(jnmf::uniform_matrix(3, 0, big), jnmf::DimensionError);
}

TEST_CASE("permutation and sampling") {
  RandomSource rng(3);
  auto p = rng.permutation(50);
  std::vector<std::size_t> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> iota(50);
  std::iota(iota.begin(), iota.end(), 0);
  CHECK(sorted == iota);
  CHECK(p != iota);

  auto s = rng.sample_sorted(100, 30);
  CHECK(s.size() == 30);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == 30);
  CHECK(s.back() < 100);
  CHECK(rng.sample_sorted(10, 10) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK_THROWS_AS(rng.sample_sorted(3, 4), jnmf::ValidationError);
}
