#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jnmf/matrix.hpp"
#include "jnmf/random.hpp"
#include "jnmf/similarity.hpp"
#include "jnmf/stats.hpp"

namespace jnmf {

/// Builds the second dataset of a trial from the first.
using DatasetTransform = std::function<Matrix(const Matrix& x1, RandomSource& rng)>;

struct PairedStats {
  SampleStats jnmf;
  SampleStats chamfer;
  std::vector<double> jnmf_values;
  std::vector<double> chamfer_values;
};

struct MeasureSelection {
  bool jnmf = true;
  bool chamfer = true;
};

/// For t in [0, trials): r = rng.derive(t), X2 = make_x2(X1, r), then both
/// measures on (X1, X2), the jNMF one continuing on r.
PairedStats average_distances(const Matrix& x1, const DatasetTransform& make_x2,
                              const SimilarityConfig& config, std::size_t trials,
                              const RandomSource& rng, MeasureSelection measures = {});

enum class TableColumn : std::size_t { self, permuted, scaled, subset, noisy, noise };
inline constexpr std::size_t kTableColumns = 6;
inline constexpr std::array<std::string_view, kTableColumns> kTableColumnNames{
    "X1", "X1Ppi", "lambdaX1", "X1tilde", "X1+N", "N"};

struct PropertySuiteConfig {
  SimilarityConfig similarity;
  std::size_t trials = 50;
  /// Fraction of columns kept for the large-subset column.
  double subset_fraction = 0.9;
  /// One value is drawn per trial for the scaled column.
  std::vector<double> lambdas{0.1, 1.0, 10.0, 100.0};
  /// epsilon of the X1 + epsilon N column.
  double noise_level = 1.0;
};

/// The transform behind each table column.
DatasetTransform table_transform(TableColumn column, const PropertySuiteConfig& config);

struct PropertyCheck {
  std::string name;
  std::string detail;
  bool passed = false;
};

struct PropertyReport {
  std::array<PairedStats, kTableColumns> columns;
  /// d(X1 + N, X1), for the symmetry check.
  PairedStats swapped_noisy;
  std::vector<PropertyCheck> checks;

  bool all_passed() const;
};

/// Runs every table column for both measures plus the swapped-argument
/// noisy comparison, then grades the symmetry, self-similarity,
/// permutation, scaling, large-subset and additive-noise properties.
PropertyReport run_property_suite(const Matrix& x1, const PropertySuiteConfig& config,
                                  const RandomSource& rng);

/// Table-shaped CSV: one row per measure, one column per table column.
std::string property_table_csv(const PropertyReport& report);

enum class SweepParameter { subset_q, noise_eps };

std::string_view to_string(SweepParameter parameter) noexcept;
SweepParameter parse_sweep_parameter(std::string_view name);

struct SweepConfig {
  SweepParameter parameter = SweepParameter::noise_eps;
  std::vector<double> values;
  std::size_t trials = 50;
  SimilarityConfig similarity;
};

struct SweepRow {
  double value = 0.0;
  PairedStats stats;
};

/// Evaluates both measures at every parameter value. Every value reuses the
/// same root stream, so neighbouring values see the same noise draws.
std::vector<SweepRow> run_sweep(const Matrix& x1, const SweepConfig& config,
                                const RandomSource& rng);

/// parameter,value,jnmf_mean,jnmf_std,jnmf_se,chamfer_mean,chamfer_std,chamfer_se
std::string sweep_csv(SweepParameter parameter, std::span<const SweepRow> rows);

/// `steps` evenly spaced values from `first` to `last` inclusive.
std::vector<double> linspace(double first, double last, std::size_t steps);

enum class Trend { nondecreasing, nonincreasing };

/// True when every step against the trend is no larger than `z` times the
/// standard error of the difference of the two means.
bool monotone_within(std::span<const SampleStats> sequence, Trend trend, double z = 2.0);

}  // namespace jnmf
