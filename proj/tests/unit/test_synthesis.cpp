#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "jnmf/error.hpp"
#include "jnmf/synthesis.hpp"

using jnmf::Matrix;

TEST_CASE("swimmer shape and structure") {
  const Matrix x = jnmf::generate_swimmer();
  CHECK(x.rows() == 220);
  CHECK(x.cols() == 256);
  for (double v : x.values()) CHECK((v == 0.0 || v == 1.0));

  // Torso equals the set of pixels present in every image.
  std::vector<std::size_t> always;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    bool all = true;
    for (std::size_t c = 0; c < x.cols() && all; ++c) all = x(r, c) == 1.0;
    if (all) always.push_back(r);
  }
  CHECK(always == jnmf::swimmer_torso_pixels());
  CHECK(always.size() == 4);

  for (std::size_t c = 0; c < x.cols(); ++c) {
    double total = 0.0;
    for (double v : x.column(c)) total += v;
    CHECK(total == 20.0);
  }
  std::set<std::vector<double>> distinct;
  for (std::size_t c = 0; c < x.cols(); ++c) distinct.insert(x.column(c));
  CHECK(distinct.size() == 256);
  CHECK(jnmf::generate_swimmer() == x);
}

TEST_CASE("swimmer variants and validation") {
  CHECK(jnmf::generate_swimmer({11, 20, 2, 4}).cols() == 16);
  CHECK(jnmf::generate_swimmer({11, 20, 4, 2}).cols() == 16);
  CHECK(jnmf::generate_swimmer({13, 24, 4, 4}).rows() == 13 * 24);
  CHECK_THROWS_AS(jnmf::generate_swimmer({5, 20, 4, 4}), jnmf::ValidationError);
  CHECK_THROWS_AS(jnmf::generate_swimmer({11, 10, 4, 4}), jnmf::ValidationError);
  CHECK_THROWS_AS(jnmf::generate_swimmer({11, 20, 5, 4}), jnmf::ValidationError);
  CHECK_THROWS_AS(jnmf::generate_swimmer({11, 20, 4, 0}), jnmf::ValidationError);
}

TEST_CASE("invert_binary") {
  const Matrix m = Matrix::from_rows({{0, 1}, {1, 0}});
  CHECK(jnmf::invert_binary(m) == Matrix::from_rows({{1, 0}, {0, 1}}));
  const Matrix x = jnmf::generate_swimmer();
  const Matrix inv = jnmf::invert_binary(x);
  CHECK(jnmf::invert_binary(inv) == x);
  for (std::size_t c = 0; c < x.cols(); ++c) {
    double total = 0.0;
    for (double v : inv.column(c)) total += v;
    CHECK(total == 200.0);
  }
  CHECK_THROWS_AS(jnmf::invert_binary(Matrix::from_rows({{0.5}})), jnmf::ValidationError);
}

TEST_CASE("add_noise") {
  const Matrix x = jnmf::generate_swimmer();
  jnmf::RandomSource a(1), b(1), c(2);
  CHECK(jnmf::add_noise(x, 0.0, a) == x);
  const Matrix n1 = jnmf::add_noise(x, 1.0, b);
  const Matrix n2 = jnmf::add_noise(x, 1.0, c);
  jnmf::RandomSource b2(1);
  CHECK(jnmf::add_noise(x, 1.0, b2) == n1);
  CHECK(n1 != n2);
  const double shift = jnmf::mean(jnmf::add(n1, jnmf::scaled(x, -1.0)));
  CHECK(shift == doctest::Approx(0.5).epsilon(0.01));
  jnmf::RandomSource d(3);
  const double shift2 = jnmf::mean(jnmf::add(jnmf::add_noise(x, 0.4, d), jnmf::scaled(x, -1.0)));
  CHECK(shift2 == doctest::Approx(0.2).epsilon(0.01));
  CHECK_THROWS_AS(jnmf::add_noise(x, -0.1, d), jnmf::ValidationError);
}

TEST_CASE("subsample_columns") {
  const Matrix x = jnmf::generate_swimmer();
  jnmf::RandomSource a(4), b(4);
  CHECK(jnmf::subsample_columns(x, 1.0, a) == x);
  const Matrix s = jnmf::subsample_columns(x, 0.9, b);
  CHECK(s.cols() == 230);
  jnmf::RandomSource c1(9), c2(9);
  CHECK(jnmf::subsample_columns(x, 0.5, c1) == jnmf::subsample_columns(x, 0.5, c2));
  // Half-up rounding: 0.5 * 5 = 2.5 -> 3.
  jnmf::RandomSource r(1);
  CHECK(jnmf::subsample_columns(Matrix(2, 5, 1.0), 0.5, r).cols() == 3);
  CHECK_THROWS_AS(jnmf::subsample_columns(Matrix(2, 5, 1.0), 0.05, r), jnmf::ValidationError);
  CHECK_THROWS_AS(jnmf::subsample_columns(Matrix(2, 5, 1.0), 1.5, r), jnmf::ValidationError);
}

TEST_CASE("permute_columns and scale_all") {
  const Matrix x = jnmf::generate_swimmer();
  jnmf::RandomSource rng(6);
  const Matrix p = jnmf::permute_columns(x, rng);
  CHECK(p != x);
  std::multiset<std::vector<double>> before, after;
  for (std::size_t c = 0; c < x.cols(); ++c) {
    before.insert(x.column(c));
    after.insert(p.column(c));
  }
  CHECK(before == after);
  CHECK(jnmf::scale_all(x, 1.0) == x);
  CHECK(jnmf::scale_all(x, 10.0)(5 * 20 + 8, 0) == 10.0);
  CHECK_THROWS_AS(jnmf::scale_all(x, 0.0), jnmf::ValidationError);
  CHECK_THROWS_AS(jnmf::scale_all(x, -2.0), jnmf::ValidationError);
}

TEST_CASE("write_pgm") {
  const auto dir = std::filesystem::temp_directory_path() / "jnmf_unit";
  std::filesystem::create_directories(dir);
  const auto path = dir / "img.pgm";
  const std::vector<double> pixels{0, 1, 0.5, 0, 0, 1};
  jnmf::write_pgm(path, pixels, 2, 3);
  std::ifstream in(path);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  CHECK(magic == "P2");
  CHECK(w == 3);
  CHECK(h == 2);
  CHECK(maxval == 255);
  std::vector<int> values(6);
  for (auto& v : values) in >> v;
  CHECK(values == std::vector<int>{0, 255, 128, 0, 0, 255});
  CHECK_THROWS_AS(jnmf::write_pgm(path, pixels, 3, 3), jnmf::DimensionError);
}
