#include "jnmf/chamfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "jnmf/error.hpp"

namespace jnmf {

double chamfer_distance(const Matrix& x1, const Matrix& x2) {
  if (x1.empty() || x2.empty()) throw ValidationError("chamfer: empty point set");
  if (x1.rows() != x2.rows()) {
    throw DimensionError("chamfer: X1 has " + std::to_string(x1.rows()) + " rows but X2 has " +
                         std::to_string(x2.rows()));
  }
  require_finite(x1, "chamfer X1");
  require_finite(x2, "chamfer X2");

  // Columns are points; transposing makes each point contiguous.
  const Matrix p = transpose(x1);
  const Matrix q = transpose(x2);
  const std::size_t n1 = p.rows();
  const std::size_t n2 = q.rows();
  const std::size_t dim = p.cols();

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> nearest_from_first(n1, inf);
  std::vector<double> nearest_from_second(n2, inf);
  for (std::size_t i = 0; i < n1; ++i) {
    const auto a = p.row(i);
    for (std::size_t j = 0; j < n2; ++j) {
      const auto b = q.row(j);
      double d = 0.0;
      for (std::size_t r = 0; r < dim; ++r) {
        const double diff = a[r] - b[r];
        d += diff * diff;
      }
      nearest_from_first[i] = std::min(nearest_from_first[i], d);
      nearest_from_second[j] = std::min(nearest_from_second[j], d);
    }
  }

  double first = 0.0;
  for (double d : nearest_from_first) first += d;
  double second = 0.0;
  for (double d : nearest_from_second) second += d;
  return first / static_cast<double>(n1) + second / static_cast<double>(n2);
}

}  // namespace jnmf
