#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jnmf/matrix.hpp"
#include "jnmf/random.hpp"
#include "jnmf/similarity.hpp"

namespace jnmf {

enum class Measure { jnmf, chamfer };

std::string_view to_string(Measure measure) noexcept;
Measure parse_measure(std::string_view name);

/// Distance between two datasets as used by every experiment: the jNMF
/// distance of a single similarity_profile run, or the Chamfer distance of
/// the column-scaled inputs (config.scaling).
double pair_distance(const Matrix& x1, const Matrix& x2, Measure measure,
                     const SimilarityConfig& config, RandomSource& rng);

/// A labeled pool of data points (columns) to draw samples from.
struct GroupSource {
  std::string label;
  Matrix columns;
};

struct DistanceMatrixConfig {
  Measure measure = Measure::jnmf;
  std::size_t trials = 50;
  std::size_t sample_size = 100;
  /// rank, samples, nmf and scaling threshold for the jNMF measure;
  /// num_trials is ignored (trials above controls averaging).
  SimilarityConfig similarity;
};

struct ClusteredDistanceMatrix {
  std::vector<std::string> labels;
  /// g x g, symmetric.
  Matrix distances;
  /// Cluster id per label; empty before clustering.
  std::vector<std::size_t> cluster_of;
  /// Group indices in heatmap order.
  std::vector<std::size_t> ordering;
  /// Positions in `ordering` where a new cluster block starts (first block
  /// omitted).
  std::vector<std::size_t> boundaries;
  std::optional<double> intra_inter_ratio;
};

/// Mean pairwise distance between fresh samples of every pair of groups.
///
/// In trial t each group draws two independent samples (the second one is
/// only used for the diagonal). Off-diagonal entries compare the first
/// samples of a and b in both argument orders and average the two; the
/// diagonal compares a group's two samples the same way. Random streams are
/// derived from the root seed, the trial and the group labels, so listing
/// the groups in another order permutes the result exactly.
ClusteredDistanceMatrix distance_matrix(std::span<const GroupSource> groups,
                                        const DistanceMatrixConfig& config,
                                        const RandomSource& rng);

struct KMeansOptions {
  std::size_t restarts = 20;
  std::size_t max_iterations = 300;
  /// Stop when no centroid moves farther than this.
  double tolerance = 1e-8;
};

struct KMeansResult {
  std::vector<std::size_t> assignment;
  /// Sum of squared distances to the assigned centroids.
  double objective = 0.0;
  /// Objective after each assignment step of the returned restart.
  std::vector<double> objective_trace;
  /// Best objective seen after each restart.
  std::vector<double> best_after_restart;
};

/// Lloyd's algorithm on the columns of m with k-means++ seeding; the best of
/// `restarts` runs is returned. An empty cluster is reseeded at the point
/// farthest from its current centroid.
KMeansResult kmeans_columns(const Matrix& m, std::size_t k, RandomSource& rng,
                            const KMeansOptions& options = {});

struct Reordering {
  Matrix matrix;
  std::vector<std::size_t> ordering;
  std::vector<std::size_t> boundaries;
};

/// Permutes rows and columns so that clusters are contiguous. Clusters are
/// ordered by size (largest first, ties by smallest member index); members
/// keep their original relative order.
Reordering reorder_by_cluster(const Matrix& m, std::span<const std::size_t> assignment);

/// Mean off-diagonal within-cluster entry divided by mean between-cluster
/// entry. Absent when either set of pairs is empty or the between-cluster
/// mean is zero.
std::optional<double> intra_inter_ratio(const Matrix& m, std::span<const std::size_t> assignment);

/// Runs k-means on the columns of `matrix.distances` and fills cluster_of,
/// ordering, boundaries and intra_inter_ratio.
void cluster_distance_matrix(ClusteredDistanceMatrix& matrix, std::size_t clusters,
                             RandomSource& rng, const KMeansOptions& options = {});

/// Writes the reordered matrix as CSV (header row = reordered labels) and a
/// JSON sidecar next to it with {labels, ordering, boundaries, ratio,
/// cluster_of} merged into `extra`.
void write_heatmap(const ClusteredDistanceMatrix& matrix, const std::filesystem::path& csv_path,
                   const std::filesystem::path& sidecar_path, nlohmann::json extra);

}  // namespace jnmf
