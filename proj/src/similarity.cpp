#include "jnmf/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jnmf/error.hpp"
#include "jnmf/parallel.hpp"
#include "jnmf/stats.hpp"

namespace jnmf {

void SimilarityConfig::validate() const {
  if (rank == 0) throw ValidationError("similarity: rank must be positive");
  if (num_samples == 0) throw ValidationError("similarity: num_samples must be positive");
  if (num_trials == 0) throw ValidationError("similarity: num_trials must be positive");
  if (!(norm_threshold_fraction >= 0.0 && norm_threshold_fraction <= 1.0)) {
    throw ValidationError("similarity: norm_threshold_fraction must lie in [0, 1]");
  }
  NmfConfig nmf_checked = nmf;
  nmf_checked.rank = rank;
  nmf_checked.validate();
}

Matrix scale_columns(const Matrix& x, ColumnScaling scaling, double norm_threshold_fraction) {
  require_nonempty(x, "column scaling");
  require_nonnegative(x, "column scaling");
  if (!(norm_threshold_fraction >= 0.0 && norm_threshold_fraction <= 1.0)) {
    throw ValidationError("norm_threshold_fraction must lie in [0, 1]");
  }
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();

  std::vector<double> norms(n, 0.0);
  std::vector<double> maxima(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    const auto row = x.row(r);
    for (std::size_t c = 0; c < n; ++c) {
      norms[c] += row[c] * row[c];
      maxima[c] = std::max(maxima[c], row[c]);
    }
  }
  double average_norm = 0.0;
  for (double& v : norms) {
    v = std::sqrt(v);
    average_norm += v;
  }
  average_norm /= static_cast<double>(n);
  const double threshold = norm_threshold_fraction * average_norm;

  std::vector<bool> scale(n);
  for (std::size_t c = 0; c < n; ++c) scale[c] = norms[c] >= threshold && maxima[c] > 0.0;

  // Divide by the maximum first; the divisor below is then computed from
  // lambda-free values.
  Matrix out = x;
  std::vector<double> divisor(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!scale[c]) continue;
      out(r, c) /= maxima[c];
      divisor[c] += scaling == ColumnScaling::mean_one ? out(r, c) : out(r, c) * out(r, c);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    divisor[c] = scaling == ColumnScaling::mean_one ? divisor[c] / static_cast<double>(m)
                                                    : std::sqrt(divisor[c]);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (scale[c]) out(r, c) /= divisor[c];
    }
  }
  return out;
}

Matrix scale_columns_mean_one(const Matrix& x, double norm_threshold_fraction) {
  return scale_columns(x, ColumnScaling::mean_one, norm_threshold_fraction);
}

std::string_view to_string(ColumnScaling scaling) noexcept {
  return scaling == ColumnScaling::mean_one ? "mean_one" : "unit_norm";
}

ColumnScaling parse_column_scaling(std::string_view name) {
  if (name == "mean_one") return ColumnScaling::mean_one;
  if (name == "unit_norm") return ColumnScaling::unit_norm;
  throw ValidationError("unknown column scaling '" + std::string(name) +
                        "' (expected mean_one or unit_norm)");
}

Edf edf_from_row(const Matrix& s, std::size_t row_index) {
  if (row_index >= s.rows()) {
    throw DimensionError("edf_from_row: row " + std::to_string(row_index) + " out of range for " +
                         std::to_string(s.rows()) + " rows");
  }
  const auto row = s.row(row_index);
  Edf edf{std::vector<double>(row.begin(), row.end())};
  std::sort(edf.sorted_values.begin(), edf.sorted_values.end());
  return edf;
}

double edf_evaluate(const Edf& edf, double t) noexcept {
  if (edf.sorted_values.empty()) return 0.0;
  const auto below = std::lower_bound(edf.sorted_values.begin(), edf.sorted_values.end(), t) -
                     edf.sorted_values.begin();
  return static_cast<double>(below) / static_cast<double>(edf.count());
}

double sample_threshold(double row_max, RandomSource& rng) noexcept {
  return rng.uniform() * row_max;
}

ContributionProfile contribution_profile(const Matrix& s1, const Matrix& s2,
                                         std::size_t num_samples, RandomSource& rng) {
  require_nonempty(s1, "S1");
  require_nonempty(s2, "S2");
  if (s1.rows() != s2.rows()) throw DimensionError("contribution_profile: S1 and S2 ranks differ");
  if (num_samples == 0) throw ValidationError("contribution_profile: num_samples must be positive");
  require_finite(s1, "S1");
  require_finite(s2, "S2");

  const std::size_t k = s1.rows();
  std::vector<Edf> first(k);
  std::vector<Edf> second(k);
  ContributionProfile out;
  out.row_maxima.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    first[i] = edf_from_row(s1, i);
    second[i] = edf_from_row(s2, i);
    out.row_maxima[i] = std::max(first[i].sorted_values.back(), second[i].sorted_values.back());
    if (!(out.row_maxima[i] > 0.0)) out.degenerate_rows.push_back(i);
  }

  std::vector<double> accumulated(k, 0.0);
  for (std::size_t j = 0; j < num_samples; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const double t = sample_threshold(out.row_maxima[i], rng);
      accumulated[i] += edf_evaluate(second[i], t) - edf_evaluate(first[i], t);
    }
  }
  out.p_bar.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.p_bar[i] = accumulated[i] / static_cast<double>(num_samples);
  for (std::size_t i : out.degenerate_rows) out.p_bar[i] = 0.0;
  return out;
}

SimilarityProfile similarity_profile(const Matrix& x1, const Matrix& x2,
                                     const SimilarityConfig& config, RandomSource& rng) {
  config.validate();
  require_nonempty(x1, "X1");
  require_nonempty(x2, "X2");
  if (x1.rows() != x2.rows()) {
    throw DimensionError("similarity: X1 has " + std::to_string(x1.rows()) + " rows but X2 has " +
                         std::to_string(x2.rows()));
  }
  const Matrix scaled1 = scale_columns(x1, config.scaling, config.norm_threshold_fraction);
  const Matrix scaled2 = scale_columns(x2, config.scaling, config.norm_threshold_fraction);

  NmfConfig nmf = config.nmf;
  nmf.rank = config.rank;

  SimilarityProfile out;
  out.factorization = jnmf_fit(scaled1, scaled2, nmf, rng);
  auto stage = contribution_profile(out.factorization.coefficients_first,
                                    out.factorization.coefficients_second, config.num_samples, rng);
  out.p_bar = std::move(stage.p_bar);
  out.row_maxima = std::move(stage.row_maxima);
  out.degenerate_rows = std::move(stage.degenerate_rows);
  out.distance = 0.0;
  for (double p : out.p_bar) out.distance += std::abs(p);
  if (!std::isfinite(out.distance)) throw NumericalError("similarity: distance is not finite");
  return out;
}

DistanceSummary jnmf_distance_trials(const Matrix& x1, const Matrix& x2,
                                     const SimilarityConfig& config, const RandomSource& rng) {
  config.validate();
  DistanceSummary out;
  out.trial_distances.assign(config.num_trials, 0.0);
  std::vector<SimilarityProfile> first(1);
  parallel_for(config.num_trials, [&](std::size_t t) {
    RandomSource trial_rng = rng.derive(t);
    auto profile = similarity_profile(x1, x2, config, trial_rng);
    out.trial_distances[t] = profile.distance;
    if (t == 0) first[0] = std::move(profile);
  });
  const auto stats = sample_stats(out.trial_distances);
  out.mean = stats.mean;
  out.standard_deviation = stats.standard_deviation;
  out.first_profile = std::move(first[0]);
  return out;
}

double jnmf_distance(const Matrix& x1, const Matrix& x2, const SimilarityConfig& config,
                     const RandomSource& rng) {
  return jnmf_distance_trials(x1, x2, config, rng).mean;
}

nlohmann::json profile_to_json(const SimilarityProfile& profile, std::uint64_t seed,
                               std::size_t trials) {
  return nlohmann::json{
      {"p_bar", profile.p_bar},
      {"distance", profile.distance},
      {"rank", profile.p_bar.size()},
      {"seed", seed},
      {"trials", trials},
      {"row_maxima", profile.row_maxima},
      {"degenerate_rows", profile.degenerate_rows},
  };
}

}  // namespace jnmf
