#include "jnmf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include "jnmf/chamfer.hpp"
#include "jnmf/csv.hpp"
#include "jnmf/error.hpp"
#include "jnmf/parallel.hpp"

namespace jnmf {

std::string_view to_string(Measure measure) noexcept {
  return measure == Measure::jnmf ? "jnmf" : "chamfer";
}

Measure parse_measure(std::string_view name) {
  if (name == "jnmf") return Measure::jnmf;
  if (name == "chamfer") return Measure::chamfer;
  throw ValidationError("unknown measure '" + std::string(name) + "' (expected jnmf or chamfer)");
}

double pair_distance(const Matrix& x1, const Matrix& x2, Measure measure,
                     const SimilarityConfig& config, RandomSource& rng) {
  if (measure == Measure::jnmf) return similarity_profile(x1, x2, config, rng).distance;
  return chamfer_distance(scale_columns(x1, config.scaling, config.norm_threshold_fraction),
                          scale_columns(x2, config.scaling, config.norm_threshold_fraction));
}

ClusteredDistanceMatrix distance_matrix(std::span<const GroupSource> groups,
                                        const DistanceMatrixConfig& config,
                                        const RandomSource& rng) {
  const std::size_t g = groups.size();
  if (g < 2) throw ValidationError("distance_matrix: need at least two groups");
  if (config.trials == 0) throw ValidationError("distance_matrix: trials must be positive");
  if (config.sample_size == 0) throw ValidationError("distance_matrix: sample size must be positive");
  if (config.measure == Measure::jnmf) config.similarity.validate();

  std::vector<std::uint64_t> keys(g);
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (groups[a].label == groups[b].label) {
        throw ValidationError("distance_matrix: duplicate label '" + groups[a].label + "'");
      }
    }
    if (groups[a].columns.rows() != groups[0].columns.rows()) {
      throw DimensionError("distance_matrix: group '" + groups[a].label +
                           "' has a different row count");
    }
    if (groups[a].columns.cols() < config.sample_size) {
      throw ValidationError("group '" + groups[a].label + "' has " +
                            std::to_string(groups[a].columns.cols()) + " columns, sample size is " +
                            std::to_string(config.sample_size));
    }
    keys[a] = mix64(stable_hash(groups[a].label));
  }

  // Per-trial matrices, summed in trial order afterwards.
  std::vector<Matrix> per_trial(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    const RandomSource trial = rng.derive(t);
    std::vector<Matrix> first(g);
    std::vector<Matrix> second(g);
    for (std::size_t a = 0; a < g; ++a) {
      RandomSource s1 = trial.derive(keys[a]);
      RandomSource s2 = trial.derive(keys[a] + 1);
      const auto& pool = groups[a].columns;
      first[a] = select_columns(pool, s1.sample_sorted(pool.cols(), config.sample_size));
      second[a] = select_columns(pool, s2.sample_sorted(pool.cols(), config.sample_size));
    }
    auto directed = [&](const Matrix& x, const Matrix& y, std::uint64_t key) {
      RandomSource r = trial.derive(key);
      return pair_distance(x, y, config.measure, config.similarity, r);
    };
    Matrix m(g, g);
    for (std::size_t a = 0; a < g; ++a) {
      const std::uint64_t self = mix64(keys[a] ^ mix64(keys[a]));
      m(a, a) = 0.5 * (directed(first[a], second[a], self + 2) +
                       directed(second[a], first[a], self + 3));
      for (std::size_t b = a + 1; b < g; ++b) {
        const double ab = directed(first[a], first[b], mix64(keys[a] ^ mix64(keys[b])) + 2);
        const double ba = directed(first[b], first[a], mix64(keys[b] ^ mix64(keys[a])) + 2);
        m(a, b) = m(b, a) = 0.5 * (ab + ba);
      }
    }
    per_trial[t] = std::move(m);
  });

  ClusteredDistanceMatrix out;
  for (const auto& grp : groups) out.labels.push_back(grp.label);
  Matrix total(g, g);
  for (const auto& m : per_trial) total = add(total, m);
  total = scaled(total, 1.0 / static_cast<double>(config.trials));
  // Exact symmetry: (M + M^T) / 2.
  out.distances = scaled(add(total, transpose(total)), 0.5);
  return out;
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    d += diff * diff;
  }
  return d;
}

struct LloydRun {
  std::vector<std::size_t> assignment;
  double objective = 0.0;
  std::vector<double> trace;
};

// Points are rows of `points` (the caller transposes columns into rows).
LloydRun lloyd(const Matrix& points, std::size_t k, RandomSource& rng,
               const KMeansOptions& options) {
  const std::size_t n = points.rows();
  const std::size_t dim = points.cols();
  constexpr double inf = std::numeric_limits<double>::infinity();

  // k-means++ seeding.
  std::vector<std::vector<double>> centers;
  centers.reserve(k);
  {
    const auto first = static_cast<std::size_t>(rng.uniform_index(n));
    const auto row = points.row(first);
    centers.emplace_back(row.begin(), row.end());
    std::vector<double> nearest(n, inf);
    while (centers.size() < k) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        nearest[i] = std::min(nearest[i], squared_distance(points.row(i), centers.back()));
        total += nearest[i];
      }
      std::size_t pick = n - 1;
      if (total > 0.0) {
        const double target = rng.uniform() * total;
        double running = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          running += nearest[i];
          if (target < running) {
            pick = i;
            break;
          }
        }
      } else {
        pick = static_cast<std::size_t>(rng.uniform_index(n));
      }
      const auto chosen = points.row(pick);
      centers.emplace_back(chosen.begin(), chosen.end());
    }
  }

  LloydRun run;
  run.assignment.assign(n, 0);
  std::vector<double> dist(n, 0.0);

  auto assign = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      double best = inf;
      std::size_t best_c = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const double d = squared_distance(points.row(i), centers[c]);
        if (d < best) {
          best = d;
          best_c = c;
        }
      }
      run.assignment[i] = best_c;
      dist[i] = best;
    }
    // Reseed empty clusters at the point farthest from its centroid.
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t c : run.assignment) ++sizes[c];
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[run.assignment[i]] > 1 && (far == n || dist[i] > dist[far])) far = i;
      }
      if (far == n) continue;
      --sizes[run.assignment[far]];
      ++sizes[c];
      run.assignment[far] = c;
      dist[far] = 0.0;
      const auto row = points.row(far);
      centers[c].assign(row.begin(), row.end());
    }
    double objective = 0.0;
    for (double d : dist) objective += d;
    return objective;
  };

  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    run.trace.push_back(assign());
    std::vector<std::vector<double>> updated(k, std::vector<double>(dim, 0.0));
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = points.row(i);
      auto& target = updated[run.assignment[i]];
      for (std::size_t d = 0; d < dim; ++d) target[d] += row[d];
      ++sizes[run.assignment[i]];
    }
    double movement = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] == 0) {
        updated[c] = centers[c];
        continue;
      }
      for (double& v : updated[c]) v /= static_cast<double>(sizes[c]);
      movement = std::max(movement, std::sqrt(squared_distance(updated[c], centers[c])));
    }
    centers = std::move(updated);
    if (movement <= options.tolerance) break;
  }
  run.objective = assign();
  run.trace.push_back(run.objective);
  return run;
}

}  // namespace

KMeansResult kmeans_columns(const Matrix& m, std::size_t k, RandomSource& rng,
                            const KMeansOptions& options) {
  require_nonempty(m, "kmeans");
  require_finite(m, "kmeans");
  if (k == 0) throw ValidationError("kmeans: k must be positive");
  if (k > m.cols()) {
    throw ValidationError("kmeans: k = " + std::to_string(k) + " exceeds " +
                          std::to_string(m.cols()) + " columns");
  }
  if (options.restarts == 0 || options.max_iterations == 0) {
    throw ValidationError("kmeans: restarts and max_iterations must be positive");
  }
  const Matrix points = transpose(m);
  KMeansResult best;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    LloydRun run = lloyd(points, k, rng, options);
    if (r == 0 || run.objective < best.objective) {
      best.assignment = std::move(run.assignment);
      best.objective = run.objective;
      best.objective_trace = std::move(run.trace);
    }
    best.best_after_restart.push_back(best.objective);
  }
  return best;
}

Reordering reorder_by_cluster(const Matrix& m, std::span<const std::size_t> assignment) {
  require_nonempty(m, "reorder_by_cluster");
  if (m.rows() != m.cols()) throw DimensionError("reorder_by_cluster: matrix is not square");
  if (assignment.size() != m.rows()) {
    throw DimensionError("reorder_by_cluster: assignment does not cover every index");
  }
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < assignment.size(); ++i) members[assignment[i]].push_back(i);
  std::vector<const std::vector<std::size_t>*> blocks;
  for (const auto& [id, list] : members) blocks.push_back(&list);
  std::sort(blocks.begin(), blocks.end(), [](const auto* a, const auto* b) {
    return a->size() != b->size() ? a->size() > b->size() : a->front() < b->front();
  });

  Reordering out;
  for (const auto* block : blocks) {
    if (!out.ordering.empty()) out.boundaries.push_back(out.ordering.size());
    out.ordering.insert(out.ordering.end(), block->begin(), block->end());
  }
  const std::size_t n = m.rows();
  out.matrix = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = m(out.ordering[i], out.ordering[j]);
  }
  return out;
}

std::optional<double> intra_inter_ratio(const Matrix& m, std::span<const std::size_t> assignment) {
  require_nonempty(m, "intra_inter_ratio");
  if (m.rows() != m.cols() || assignment.size() != m.rows()) {
    throw DimensionError("intra_inter_ratio: matrix and assignment do not match");
  }
  double intra = 0.0;
  double inter = 0.0;
  std::size_t intra_n = 0;
  std::size_t inter_n = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j) continue;
      if (assignment[i] == assignment[j]) {
        intra += m(i, j);
        ++intra_n;
      } else {
        inter += m(i, j);
        ++inter_n;
      }
    }
  }
  if (intra_n == 0 || inter_n == 0 || inter == 0.0) return std::nullopt;
  return (intra / static_cast<double>(intra_n)) / (inter / static_cast<double>(inter_n));
}

void cluster_distance_matrix(ClusteredDistanceMatrix& matrix, std::size_t clusters,
                             RandomSource& rng, const KMeansOptions& options) {
  const auto km = kmeans_columns(matrix.distances, clusters, rng, options);
  matrix.cluster_of = km.assignment;
  auto reordered = reorder_by_cluster(matrix.distances, km.assignment);
  matrix.ordering = std::move(reordered.ordering);
  matrix.boundaries = std::move(reordered.boundaries);
  matrix.intra_inter_ratio = intra_inter_ratio(matrix.distances, km.assignment);
}

void write_heatmap(const ClusteredDistanceMatrix& matrix, const std::filesystem::path& csv_path,
                   const std::filesystem::path& sidecar_path, nlohmann::json extra) {
  std::vector<std::size_t> ordering = matrix.ordering;
  if (ordering.empty()) {
    for (std::size_t i = 0; i < matrix.labels.size(); ++i) ordering.push_back(i);
  }
  const std::size_t n = ordering.size();
  Matrix reordered(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(matrix.labels[ordering[i]]);
    for (std::size_t j = 0; j < n; ++j) reordered(i, j) = matrix.distances(ordering[i], ordering[j]);
  }
  matrix_to_csv(reordered, csv_path, labels);

  extra["labels"] = matrix.labels;
  extra["ordering"] = ordering;
  extra["boundaries"] = matrix.boundaries;
  extra["cluster_of"] = matrix.cluster_of;
  extra["ratio"] = matrix.intra_inter_ratio ? nlohmann::json(*matrix.intra_inter_ratio)
                                            : nlohmann::json(nullptr);
  std::ofstream out(sidecar_path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + sidecar_path.string() + "' for writing");
  out << extra.dump(2) << '\n';
  if (!out) throw IoError("error writing '" + sidecar_path.string() + "'");
}

}  // namespace jnmf
