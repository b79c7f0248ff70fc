#include "jnmf/experiments.hpp"

#include <cmath>
#include <sstream>

#include "jnmf/chamfer.hpp"
#include "jnmf/error.hpp"
#include "jnmf/parallel.hpp"
#include "jnmf/synthesis.hpp"

namespace jnmf {

PairedStats average_distances(const Matrix& x1, const DatasetTransform& make_x2,
                              const SimilarityConfig& config, std::size_t trials,
                              const RandomSource& rng, MeasureSelection measures) {
  if (trials == 0) throw ValidationError("trials must be positive");
  config.validate();
  PairedStats out;
  if (measures.jnmf) out.jnmf_values.assign(trials, 0.0);
  if (measures.chamfer) out.chamfer_values.assign(trials, 0.0);
  const Matrix scaled1 = scale_columns(x1, config.scaling, config.norm_threshold_fraction);

  parallel_for(trials, [&](std::size_t t) {
    RandomSource r = rng.derive(t);
    const Matrix x2 = make_x2(x1, r);
    if (measures.chamfer) {
      out.chamfer_values[t] =
          chamfer_distance(scaled1, scale_columns(x2, config.scaling, config.norm_threshold_fraction));
    }
    if (measures.jnmf) out.jnmf_values[t] = similarity_profile(x1, x2, config, r).distance;
  });
  out.jnmf = sample_stats(out.jnmf_values);
  out.chamfer = sample_stats(out.chamfer_values);
  return out;
}

DatasetTransform table_transform(TableColumn column, const PropertySuiteConfig& config) {
  switch (column) {
    case TableColumn::self:
      return [](const Matrix& x, RandomSource&) { return x; };
    case TableColumn::permuted:
      return [](const Matrix& x, RandomSource& r) { return permute_columns(x, r); };
    case TableColumn::scaled: {
      if (config.lambdas.empty()) throw ValidationError("property suite: no lambda values");
      auto lambdas = config.lambdas;
      return [lambdas](const Matrix& x, RandomSource& r) {
        return scale_all(x, lambdas[r.uniform_index(lambdas.size())]);
      };
    }
    case TableColumn::subset: {
      const double q = config.subset_fraction;
      return [q](const Matrix& x, RandomSource& r) { return subsample_columns(x, q, r); };
    }
    case TableColumn::noisy: {
      const double eps = config.noise_level;
      return [eps](const Matrix& x, RandomSource& r) { return add_noise(x, eps, r); };
    }
    case TableColumn::noise:
      return [](const Matrix& x, RandomSource& r) { return uniform_matrix(x.rows(), x.cols(), r); };
  }
  throw ValidationError("unknown table column");
}

bool PropertyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << std::fixed << v;
  return s.str();
}

PropertyCheck within(std::string name, double value, double lo, double hi, const char* what) {
  PropertyCheck c;
  c.name = std::move(name);
  c.passed = value >= lo && value <= hi;
  c.detail = std::string(what) + " = " + fmt(value) + ", expected [" + fmt(lo) + ", " + fmt(hi) + "]";
  return c;
}

PropertyCheck exact_zero(std::string name, const std::vector<double>& values, const char* what) {
  PropertyCheck c;
  c.name = std::move(name);
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v));
  c.passed = worst == 0.0;
  c.detail = std::string(what) + " max over trials = " + fmt(worst) + ", expected exactly 0";
  return c;
}

}  // namespace

PropertyReport run_property_suite(const Matrix& x1, const PropertySuiteConfig& config,
                                  const RandomSource& rng) {
  PropertyReport report;
  for (std::size_t c = 0; c < kTableColumns; ++c) {
    const auto column = static_cast<TableColumn>(c);
    report.columns[c] = average_distances(x1, table_transform(column, config), config.similarity,
                                          config.trials, rng.derive(c));
  }
  // Same noisy X2 per trial as the X1+N column, arguments swapped.
  {
    const auto make_noisy = table_transform(TableColumn::noisy, config);
    const RandomSource noisy_rng = rng.derive(static_cast<std::size_t>(TableColumn::noisy));
    std::vector<double> jn(config.trials), ch(config.trials);
    parallel_for(config.trials, [&](std::size_t t) {
      RandomSource r = noisy_rng.derive(t);
      const Matrix x2 = make_noisy(x1, r);
      const auto& sim = config.similarity;
      ch[t] = chamfer_distance(scale_columns(x2, sim.scaling, sim.norm_threshold_fraction),
                               scale_columns(x1, sim.scaling, sim.norm_threshold_fraction));
      jn[t] = similarity_profile(x2, x1, config.similarity, r).distance;
    });
    report.swapped_noisy.jnmf_values = jn;
    report.swapped_noisy.chamfer_values = ch;
    report.swapped_noisy.jnmf = sample_stats(jn);
    report.swapped_noisy.chamfer = sample_stats(ch);
  }

  const auto& col = report.columns;
  auto jn = [&](TableColumn c) { return col[static_cast<std::size_t>(c)].jnmf.mean; };
  auto ch = [&](TableColumn c) -> const std::vector<double>& {
    return col[static_cast<std::size_t>(c)].chamfer_values;
  };
  auto& checks = report.checks;

  {
    const auto& fwd = col[static_cast<std::size_t>(TableColumn::noisy)];
    const auto& bwd = report.swapped_noisy;
    const double diff = std::abs(fwd.jnmf.mean - bwd.jnmf.mean);
    const double se = std::hypot(fwd.jnmf.standard_error, bwd.jnmf.standard_error);
    PropertyCheck c{"P1 symmetry (jnmf)", "", diff <= 2.0 * se};
    c.detail = "|d(X1,X1+N) - d(X1+N,X1)| = " + fmt(diff) + ", allowed 2 SE = " + fmt(2.0 * se);
    checks.push_back(std::move(c));
    PropertyCheck e{"P1 symmetry (chamfer)", "chamfer forward and swapped values identical",
                    fwd.chamfer_values == bwd.chamfer_values};
    checks.push_back(std::move(e));
  }
  checks.push_back(within("P2 self-similarity (jnmf)", jn(TableColumn::self), 0.0, 0.02, "d(X1,X1)"));
  checks.push_back(exact_zero("P2 self-similarity (chamfer)", ch(TableColumn::self), "d_cham(X1,X1)"));
  checks.push_back(within("P3 permutation (jnmf)", jn(TableColumn::permuted), 0.0, 0.02, "d(X1,X1 P)"));
  checks.push_back(exact_zero("P3 permutation (chamfer)", ch(TableColumn::permuted), "d_cham(X1,X1 P)"));
  checks.push_back(within("P4 scaling (jnmf)", jn(TableColumn::scaled), 0.0, 0.02, "d(X1,lambda X1)"));
  checks.push_back(exact_zero("P4 scaling (chamfer)", ch(TableColumn::scaled), "d_cham(X1,lambda X1)"));
  checks.push_back(within("P5 large subset (jnmf)", jn(TableColumn::subset), 0.0, 0.15, "d(X1,X1~)"));
  checks.push_back(exact_zero("P5 large subset (chamfer)", ch(TableColumn::subset), "d_cham(X1,X1~)"));
  checks.push_back(within("P6 additive noise (jnmf)", jn(TableColumn::noisy), 1.0, 2.0, "d(X1,X1+N)"));
  checks.push_back(within("P6 additive noise (chamfer)",
                          col[static_cast<std::size_t>(TableColumn::noisy)].chamfer.mean, 0.5, 1.0,
                          "d_cham(X1,X1+N)"));
  checks.push_back(within("noise baseline (jnmf)", jn(TableColumn::noise), 1.8, 2.8, "d(X1,N)"));
  checks.push_back(within("noise baseline (chamfer)",
                          col[static_cast<std::size_t>(TableColumn::noise)].chamfer.mean, 1.2, 2.0,
                          "d_cham(X1,N)"));
  return report;
}

std::string property_table_csv(const PropertyReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "measure";
  for (auto name : kTableColumnNames) out << ',' << name;
  out << '\n' << "jnmf";
  for (const auto& c : report.columns) out << ',' << c.jnmf.mean;
  out << '\n' << "chamfer";
  for (const auto& c : report.columns) out << ',' << c.chamfer.mean;
  out << '\n';
  return out.str();
}

std::string_view to_string(SweepParameter parameter) noexcept {
  return parameter == SweepParameter::subset_q ? "subset_q" : "noise_eps";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  if (name == "subset_q") return SweepParameter::subset_q;
  if (name == "noise_eps") return SweepParameter::noise_eps;
  throw ValidationError("unknown sweep parameter '" + std::string(name) +
                        "' (expected subset_q or noise_eps)");
}

std::vector<SweepRow> run_sweep(const Matrix& x1, const SweepConfig& config,
                                const RandomSource& rng) {
  if (config.values.size() < 2) throw ValidationError("sweep: need at least two parameter values");
  std::vector<SweepRow> rows;
  for (double v : config.values) {
    DatasetTransform make;
    if (config.parameter == SweepParameter::subset_q) {
      make = [v](const Matrix& x, RandomSource& r) { return subsample_columns(x, v, r); };
    } else {
      make = [v](const Matrix& x, RandomSource& r) { return add_noise(x, v, r); };
    }
    rows.push_back({v, average_distances(x1, make, config.similarity, config.trials, rng)});
  }
  return rows;
}

std::string sweep_csv(SweepParameter parameter, std::span<const SweepRow> rows) {
  std::ostringstream out;
  out.precision(17);
  out << "parameter,value,jnmf_mean,jnmf_std,jnmf_se,chamfer_mean,chamfer_std,chamfer_se\n";
  for (const auto& r : rows) {
    out << to_string(parameter) << ',' << r.value << ',' << r.stats.jnmf.mean << ','
        << r.stats.jnmf.standard_deviation << ',' << r.stats.jnmf.standard_error << ','
        << r.stats.chamfer.mean << ',' << r.stats.chamfer.standard_deviation << ','
        << r.stats.chamfer.standard_error << '\n';
  }
  return out.str();
}

std::vector<double> linspace(double first, double last, std::size_t steps) {
  if (steps < 2) throw ValidationError("linspace: need at least two steps");
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = first + (last - first) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  out.back() = last;
  return out;
}

bool monotone_within(std::span<const SampleStats> sequence, Trend trend, double z) {
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    const double step = sequence[i].mean - sequence[i - 1].mean;
    const double against = trend == Trend::nondecreasing ? -step : step;
    const double se = std::hypot(sequence[i].standard_error, sequence[i - 1].standard_error);
    if (against > z * se) return false;
  }
  return true;
}

}  // namespace jnmf
