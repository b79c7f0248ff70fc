#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jnmf/matrix.hpp"
#include "jnmf/random.hpp"

namespace jnmf {

enum class NmfInit {
  /// A and S drawn i.i.d. from unif((0, 1]) scaled by sqrt(mean(X) / k).
  random_uniform,
  /// Caller supplies the starting factors in NmfConfig.
  provided,
};

struct NmfConfig {
  std::size_t rank = 10;
  std::size_t max_iterations = 500;
  /// Stop once (f_prev - f) / f_prev drops below this.
  double tolerance = 1e-6;
  /// Added to every update denominator.
  double epsilon_guard = 1e-12;
  NmfInit init = NmfInit::random_uniform;
  std::optional<Matrix> initial_basis;         // m x k, for NmfInit::provided
  std::optional<Matrix> initial_coefficients;  // k x n, for NmfInit::provided

  void validate() const;
};

struct NmfResult {
  Matrix basis;         // A, m x k
  Matrix coefficients;  // S, k x n
  /// ||X - AS||_F^2 after each iteration.
  std::vector<double> objective_trace;
  std::size_t iterations_run = 0;
  bool converged = false;
};

struct JnmfFactorization {
  Matrix basis;                // A, m x k
  Matrix coefficients_first;   // S1, k x n1
  Matrix coefficients_second;  // S2, k x n2
  /// ||X1 - A S1||_F^2 + ||X2 - A S2||_F^2
  double objective = 0.0;
  std::size_t iterations_run = 0;
  bool converged = false;
};

struct FactorPair {
  Matrix basis;
  Matrix coefficients;
};

/// One Lee-Seung step: A first, then S against the updated A.
///   A' = A .* (X S^T) ./ (A S S^T + eps)
///   S' = S .* (A'^T X) ./ (A'^T A' S + eps)
FactorPair multiplicative_update_step(const Matrix& x, const Matrix& basis,
                                      const Matrix& coefficients, double epsilon_guard);

/// Rank-k NMF of a nonnegative matrix by multiplicative updates.
NmfResult nmf_fit(const Matrix& x, const NmfConfig& config, RandomSource& rng);

/// Joint NMF with a shared basis: NMF of [X1 X2] with the coefficient
/// matrix split back into the X1 and X2 column blocks.
JnmfFactorization jnmf_fit(const Matrix& x1, const Matrix& x2, const NmfConfig& config,
                           RandomSource& rng);

}  // namespace jnmf
