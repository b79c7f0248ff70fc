#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace jnmf {

/// Dense real matrix stored row-major.
///
/// A default-constructed Matrix is empty (0x0) and exists only so that
/// aggregates holding matrices can be value-initialized; every operation in
/// the library that consumes data rejects empty matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double operator()(std::size_t r, std::size_t c) const noexcept { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return values_[r * cols_ + c]; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  std::span<const double> row(std::size_t r) const noexcept {
    return std::span<const double>(values_).subspan(r * cols_, cols_);
  }
  std::vector<double> column(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Structural operations.
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix column_block(const Matrix& m, std::size_t first, std::size_t count);
Matrix select_columns(const Matrix& m, std::span<const std::size_t> indices);
Matrix transpose(const Matrix& m);

// Arithmetic.
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& m, double factor);
Matrix add(const Matrix& a, const Matrix& b);
double sum(const Matrix& m);
double mean(const Matrix& m);
double frobenius_norm_squared(const Matrix& m);
double frobenius_distance_squared(const Matrix& a, const Matrix& b);
/// ||X - A S||_F^2 without materializing the residual on the caller's side.
double residual_squared(const Matrix& x, const Matrix& a, const Matrix& s);

// Validation helpers. `what` names the argument in the error message.
void require_nonempty(const Matrix& m, std::string_view what);
void require_finite(const Matrix& m, std::string_view what);
void require_nonnegative(const Matrix& m, std::string_view what);
bool has_positive_entry(const Matrix& m) noexcept;

}  // namespace jnmf
