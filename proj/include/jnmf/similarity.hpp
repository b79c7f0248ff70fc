#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jnmf/matrix.hpp"
#include "jnmf/nmf.hpp"
#include "jnmf/random.hpp"

namespace jnmf {

/// How columns are normalized before factorization and before Chamfer.
enum class ColumnScaling {
  /// Each column divided by its mean.
  mean_one,
  /// Each column divided by its L2 norm.
  unit_norm,
};

std::string_view to_string(ColumnScaling scaling) noexcept;
ColumnScaling parse_column_scaling(std::string_view name);

struct SimilarityConfig {
  /// Rank of the joint factorization. Overrides nmf.rank.
  std::size_t rank = 10;
  /// Number of threshold draws averaged into p_bar.
  std::size_t num_samples = 500;
  NmfConfig nmf;
  /// Columns with L2 norm below this fraction of the average column norm
  /// are left unscaled.
  double norm_threshold_fraction = 0.05;
  ColumnScaling scaling = ColumnScaling::mean_one;
  /// Independent runs averaged by jnmf_distance.
  std::size_t num_trials = 50;

  void validate() const;
};

/// Empirical distribution function of a finite sample.
struct Edf {
  std::vector<double> sorted_values;

  std::size_t count() const noexcept { return sorted_values.size(); }
};

struct SimilarityProfile {
  /// Per-basis contribution ratio in [-1, 1]. Positive means the basis
  /// vector is used more by the first dataset.
  std::vector<double> p_bar;
  /// Sum of |p_bar[i]|.
  double distance = 0.0;
  JnmfFactorization factorization;
  /// Largest coefficient of each basis row over both datasets.
  std::vector<double> row_maxima;
  /// Rows whose coefficients are all zero; their p_bar entry is 0.
  std::vector<std::size_t> degenerate_rows;
};

/// Output of the EDF-comparison stage for fixed coefficient matrices.
struct ContributionProfile {
  std::vector<double> p_bar;
  std::vector<double> row_maxima;
  std::vector<std::size_t> degenerate_rows;
};

/// Divides every column whose norm reaches `norm_threshold_fraction` times
/// the average column norm by its mean, leaving it with mean one. Columns
/// under the threshold are copied unchanged.
///
/// Each column is divided by its largest entry before the mean, so
/// proportional columns with two distinct values (binary images times any
/// lambda) scale to bit-identical results.
Matrix scale_columns_mean_one(const Matrix& x, double norm_threshold_fraction);

/// Same threshold rule with either normalization. Columns are divided by
/// their maximum first in both modes.
Matrix scale_columns(const Matrix& x, ColumnScaling scaling, double norm_threshold_fraction);

Edf edf_from_row(const Matrix& s, std::size_t row_index);
/// Fraction of the sample strictly below t.
double edf_evaluate(const Edf& edf, double t) noexcept;

/// Threshold for one (draw, row) pair: uniform on [0, row_max].
double sample_threshold(double row_max, RandomSource& rng) noexcept;

/// Averages F2(T) - F1(T) over `num_samples` thresholds per basis row, where
/// F1, F2 are the EDFs of row i of s1 and s2. Draws are made draw-major:
/// for j in 1..K, for i in 1..k.
ContributionProfile contribution_profile(const Matrix& s1, const Matrix& s2,
                                         std::size_t num_samples, RandomSource& rng);

/// Scale, factorize jointly, compare coefficient EDFs.
SimilarityProfile similarity_profile(const Matrix& x1, const Matrix& x2,
                                     const SimilarityConfig& config, RandomSource& rng);

struct DistanceSummary {
  double mean = 0.0;
  double standard_deviation = 0.0;
  std::vector<double> trial_distances;
  /// Full profile of trial 0, kept for inspection.
  SimilarityProfile first_profile;
};

/// similarity_profile repeated config.num_trials times; trial t runs on
/// rng.derive(t).
DistanceSummary jnmf_distance_trials(const Matrix& x1, const Matrix& x2,
                                     const SimilarityConfig& config, const RandomSource& rng);

/// Mean of ||p_bar||_1 over config.num_trials runs.
double jnmf_distance(const Matrix& x1, const Matrix& x2, const SimilarityConfig& config,
                     const RandomSource& rng);

/// {p_bar, distance, rank, seed, trials, row_maxima, degenerate_rows}
nlohmann::json profile_to_json(const SimilarityProfile& profile, std::uint64_t seed,
                               std::size_t trials);

}  // namespace jnmf
