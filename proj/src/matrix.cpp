#include "jnmf/matrix.hpp"

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "eigen_map.hpp"
#include "jnmf/error.hpp"

namespace jnmf {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  if (values_.size() != rows * cols) {
    throw DimensionError("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " needs " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(values_.size()));
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> values;
  values.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged initializer");
    values.insert(values.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(values));
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) {
    throw DimensionError("hstack: row counts differ (" + std::to_string(left.rows()) + " vs " +
                         std::to_string(right.rows()) + ")");
  }
  Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

Matrix column_block(const Matrix& m, std::size_t first, std::size_t count) {
  if (count == 0 || first + count > m.cols()) {
    throw DimensionError("column_block: columns [" + std::to_string(first) + ", " +
                         std::to_string(first + count) + ") out of range for " +
                         std::to_string(m.cols()) + " columns");
  }
  Matrix out(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = m(r, first + c);
  }
  return out;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> indices) {
  if (indices.empty()) throw DimensionError("select_columns: no columns selected");
  Matrix out(m.rows(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= m.cols()) {
      throw DimensionError("select_columns: index " + std::to_string(indices[j]) +
                           " out of range");
    }
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(r, j) = m(r, indices[j]);
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  }
  Matrix out(a.rows(), b.cols());
  detail::map(out).noalias() = detail::map(a) * detail::map(b);
  return out;
}

Matrix scaled(const Matrix& m, double factor) {
  Matrix out = m;
  for (double& v : out.values()) v *= factor;
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shapes differ");
  Matrix out = a;
  auto dst = out.values();
  auto src = b.values();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

double sum(const Matrix& m) {
  double total = 0.0;
  for (double v : m.values()) total += v;
  return total;
}

double mean(const Matrix& m) {
  require_nonempty(m, "mean");
  return sum(m) / static_cast<double>(m.size());
}

double frobenius_norm_squared(const Matrix& m) {
  double total = 0.0;
  for (double v : m.values()) total += v * v;
  return total;
}

double frobenius_distance_squared(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance_squared: shapes differ");
  }
  auto x = a.values();
  auto y = b.values();
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    total += d * d;
  }
  return total;
}

double residual_squared(const Matrix& x, const Matrix& a, const Matrix& s) {
  if (a.rows() != x.rows() || s.cols() != x.cols() || a.cols() != s.rows()) {
    throw DimensionError("residual_squared: factor shapes do not match data");
  }
  return (detail::map(x) - detail::map(a) * detail::map(s)).squaredNorm();
}

void require_nonempty(const Matrix& m, std::string_view what) {
  if (m.empty()) throw ValidationError(std::string(what) + ": matrix is empty");
}

void require_finite(const Matrix& m, std::string_view what) {
  for (double v : m.values()) {
    if (!std::isfinite(v)) throw ValidationError(std::string(what) + ": contains NaN or Inf");
  }
}

void require_nonnegative(const Matrix& m, std::string_view what) {
  require_finite(m, what);
  for (double v : m.values()) {
    if (v < 0.0) throw ValidationError(std::string(what) + ": contains a negative entry");
  }
}

bool has_positive_entry(const Matrix& m) noexcept {
  for (double v : m.values()) {
    if (v > 0.0) return true;
  }
  return false;
}

}  // namespace jnmf
