#pragma once

#include "jnmf/matrix.hpp"

namespace jnmf {

/// Chamfer distance between the column sets of x1 and x2: the mean squared
/// Euclidean distance from each column to its nearest neighbour in the other
/// set, summed over both directions. Brute force, O(n1 n2 m).
double chamfer_distance(const Matrix& x1, const Matrix& x2);

}  // namespace jnmf
