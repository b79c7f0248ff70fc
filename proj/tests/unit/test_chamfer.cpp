#include <doctest.h>

#include <cmath>

#include "jnmf/chamfer.hpp"
#include "jnmf/error.hpp"
#include "jnmf/random.hpp"
#include "oracles.hpp"

using jnmf::Matrix;

TEST_CASE("chamfer hand-computed cases") {
  CHECK(jnmf::chamfer_distance(Matrix::from_rows({{0}, {0}}), Matrix::from_rows({{3}, {4}})) == 50.0);
  CHECK(jnmf::chamfer_distance(Matrix::from_rows({{0, 1}, {0, 0}}), Matrix::from_rows({{0}, {0}})) == 0.5);
  const Matrix x = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(jnmf::chamfer_distance(x, x) == 0.0);
}

TEST_CASE("chamfer matches the double-loop oracle") {
  jnmf::RandomSource rng(555);
  for (int c = 0; c < 100; ++c) {
    const std::size_t m = 1 + rng.uniform_index(12);
    const Matrix a = jnmf::uniform_matrix(m, 1 + rng.uniform_index(20), rng);
    const Matrix b = jnmf::scaled(jnmf::uniform_matrix(m, 1 + rng.uniform_index(20), rng), 2.0);
    const double got = jnmf::chamfer_distance(a, b);
    const double want = oracle::chamfer(a, b);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, want));
    CHECK(got == jnmf::chamfer_distance(b, a));
  }
}

TEST_CASE("chamfer invariances") {
  jnmf::RandomSource rng(8);
  const Matrix a = jnmf::uniform_matrix(6, 10, rng);
  const Matrix b = jnmf::uniform_matrix(6, 7, rng);
  const auto order = rng.permutation(10);
  CHECK(jnmf::chamfer_distance(jnmf::select_columns(a, order), b) == doctest::Approx(jnmf::chamfer_distance(a, b)));
  const std::vector<std::size_t> subset{1, 4, 5};
  CHECK(jnmf::chamfer_distance(a, jnmf::select_columns(a, subset)) > 0.0);
  CHECK(jnmf::chamfer_distance(a, jnmf::hstack(a, jnmf::select_columns(a, subset))) == 0.0);
}

TEST_CASE("chamfer errors") {
  CHECK_THROWS_AS(jnmf::chamfer_distance(Matrix(2, 2), Matrix(3, 2)), jnmf::DimensionError);
  CHECK_THROWS_AS(jnmf::chamfer_distance(Matrix(), Matrix(3, 2)), jnmf::ValidationError);
}
