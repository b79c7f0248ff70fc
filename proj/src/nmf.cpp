#include "jnmf/nmf.hpp"

#include <cmath>
#include <string>

#include "eigen_map.hpp"
#include "jnmf/error.hpp"

namespace jnmf {

namespace {

using detail::RowMatrix;

template <typename XType>
void update_in_place(const XType& x, RowMatrix& a, RowMatrix& s, double eps) {
  const RowMatrix xst = x * s.transpose();
  const RowMatrix sst = s * s.transpose();
  const RowMatrix a_den = a * sst;
  a = a.cwiseProduct(xst).cwiseQuotient((a_den.array() + eps).matrix());

  const RowMatrix atx = a.transpose() * x;
  const RowMatrix ata = a.transpose() * a;
  const RowMatrix s_den = ata * s;
  s = s.cwiseProduct(atx).cwiseQuotient((s_den.array() + eps).matrix());
}

template <typename XType>
double objective(const XType& x, const RowMatrix& a, const RowMatrix& s) {
  return (x - a * s).squaredNorm();
}

}  // namespace

void NmfConfig::validate() const {
  if (rank == 0) throw ValidationError("nmf: rank must be positive");
  if (max_iterations == 0) throw ValidationError("nmf: max_iterations must be positive");
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw ValidationError("nmf: tolerance must be a finite nonnegative number");
  }
  if (!(epsilon_guard > 0.0) || !std::isfinite(epsilon_guard)) {
    throw ValidationError("nmf: epsilon_guard must be positive");
  }
  if (init == NmfInit::provided && (!initial_basis || !initial_coefficients)) {
    throw ValidationError("nmf: provided initialization requires both initial factors");
  }
}

FactorPair multiplicative_update_step(const Matrix& x, const Matrix& basis,
                                      const Matrix& coefficients, double epsilon_guard) {
  if (basis.rows() != x.rows() || coefficients.cols() != x.cols() ||
      basis.cols() != coefficients.rows()) {
    throw DimensionError("multiplicative_update_step: factor shapes do not conform to data");
  }
  if (!(epsilon_guard > 0.0)) throw ValidationError("epsilon_guard must be positive");
  require_nonnegative(x, "X");
  require_nonnegative(basis, "A");
  require_nonnegative(coefficients, "S");

  RowMatrix a = detail::map(basis);
  RowMatrix s = detail::map(coefficients);
  update_in_place(detail::map(x), a, s, epsilon_guard);
  return {detail::to_matrix(a), detail::to_matrix(s)};
}

NmfResult nmf_fit(const Matrix& x, const NmfConfig& config, RandomSource& rng) {
  config.validate();
  require_nonempty(x, "nmf X");
  require_nonnegative(x, "nmf X");
  if (!has_positive_entry(x)) throw ValidationError("nmf X: matrix is all zeros");

  const auto m = static_cast<Eigen::Index>(x.rows());
  const auto n = static_cast<Eigen::Index>(x.cols());
  const auto k = static_cast<Eigen::Index>(config.rank);

  RowMatrix a(m, k);
  RowMatrix s(k, n);
  if (config.init == NmfInit::provided) {
    const Matrix& a0 = *config.initial_basis;
    const Matrix& s0 = *config.initial_coefficients;
    if (a0.rows() != x.rows() || a0.cols() != config.rank || s0.rows() != config.rank ||
        s0.cols() != x.cols()) {
      throw DimensionError("nmf: provided initial factors have the wrong shape");
    }
    require_nonnegative(a0, "initial A");
    require_nonnegative(s0, "initial S");
    a = detail::map(a0);
    s = detail::map(s0);
  } else {
    const double scale = std::sqrt(mean(x) / static_cast<double>(config.rank));
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = rng.uniform_positive() * scale;
    for (Eigen::Index i = 0; i < s.size(); ++i) s.data()[i] = rng.uniform_positive() * scale;
  }

  const auto xm = detail::map(x);
  NmfResult result;
  result.objective_trace.reserve(config.max_iterations);
  double previous = objective(xm, a, s);
  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    update_in_place(xm, a, s, config.epsilon_guard);
    const double current = objective(xm, a, s);
    if (!std::isfinite(current)) {
      throw NumericalError("nmf: objective became non-finite at iteration " +
                           std::to_string(it + 1));
    }
    result.objective_trace.push_back(current);
    result.iterations_run = it + 1;
    if (previous <= 0.0 || (previous - current) / previous < config.tolerance) {
      result.converged = true;
      break;
    }
    previous = current;
  }
  result.basis = detail::to_matrix(a);
  result.coefficients = detail::to_matrix(s);
  return result;
}

JnmfFactorization jnmf_fit(const Matrix& x1, const Matrix& x2, const NmfConfig& config,
                           RandomSource& rng) {
  require_nonempty(x1, "X1");
  require_nonempty(x2, "X2");
  if (x1.rows() != x2.rows()) {
    throw DimensionError("jnmf: X1 has " + std::to_string(x1.rows()) + " rows but X2 has " +
                         std::to_string(x2.rows()));
  }
  require_nonnegative(x1, "X1");
  require_nonnegative(x2, "X2");

  const NmfResult fit = nmf_fit(hstack(x1, x2), config, rng);
  JnmfFactorization out;
  out.basis = fit.basis;
  out.coefficients_first = column_block(fit.coefficients, 0, x1.cols());
  out.coefficients_second = column_block(fit.coefficients, x1.cols(), x2.cols());
  out.objective = residual_squared(x1, out.basis, out.coefficients_first) +
                  residual_squared(x2, out.basis, out.coefficients_second);
  out.iterations_run = fit.iterations_run;
  out.converged = fit.converged;
  return out;
}

}  // namespace jnmf
