#pragma once

// Independent reference implementations used only by the tests. They favour
// obviously-correct loops over speed and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "jnmf/matrix.hpp"

namespace oracle {

inline double edf(const std::vector<double>& values, double t) {
  std::size_t below = 0;
  for (double v : values) {
    if (v < t) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(values.size());
}

inline double chamfer(const jnmf::Matrix& x1, const jnmf::Matrix& x2) {
  auto sq = [&](std::size_t a, std::size_t b) {
    double d = 0.0;
    for (std::size_t r = 0; r < x1.rows(); ++r) {
      const double diff = x1(r, a) - x2(r, b);
      d += diff * diff;
    }
    return d;
  };
  double first = 0.0;
  for (std::size_t a = 0; a < x1.cols(); ++a) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < x2.cols(); ++b) best = std::min(best, sq(a, b));
    first += best;
  }
  double second = 0.0;
  for (std::size_t b = 0; b < x2.cols(); ++b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < x1.cols(); ++a) best = std::min(best, sq(a, b));
    second += best;
  }
  return first / static_cast<double>(x1.cols()) + second / static_cast<double>(x2.cols());
}

inline jnmf::Matrix matmul(const jnmf::Matrix& a, const jnmf::Matrix& b) {
  jnmf::Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      long double acc = 0.0L;
      for (std::size_t p = 0; p < a.cols(); ++p) acc += static_cast<long double>(a(i, p)) * b(p, j);
      out(i, j) = static_cast<double>(acc);
    }
  }
  return out;
}

inline double objective(const jnmf::Matrix& x, const jnmf::Matrix& a, const jnmf::Matrix& s) {
  const jnmf::Matrix as = matmul(a, s);
  long double total = 0.0L;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const long double d = static_cast<long double>(x(i, j)) - as(i, j);
      total += d * d;
    }
  }
  return static_cast<double>(total);
}

inline double max_abs_diff(const jnmf::Matrix& a, const jnmf::Matrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  }
  return worst;
}

}  // namespace oracle
