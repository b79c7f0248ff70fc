#pragma once

// Private bridge between jnmf::Matrix storage and Eigen expressions.

#include <Eigen/Core>

#include "jnmf/matrix.hpp"

namespace jnmf::detail {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMatrix>;
using MutableMap = Eigen::Map<RowMatrix>;

inline ConstMap map(const Matrix& m) {
  return ConstMap(m.values().data(), static_cast<Eigen::Index>(m.rows()),
                  static_cast<Eigen::Index>(m.cols()));
}

inline MutableMap map(Matrix& m) {
  return MutableMap(m.values().data(), static_cast<Eigen::Index>(m.rows()),
                    static_cast<Eigen::Index>(m.cols()));
}

inline Matrix to_matrix(const RowMatrix& m) {
  Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  map(out) = m;
  return out;
}

}  // namespace jnmf::detail
