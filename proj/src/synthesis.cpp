#include "jnmf/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <string>

#include "jnmf/error.hpp"

namespace jnmf {

namespace {

constexpr std::size_t kMaxLimbs = 4;
constexpr std::size_t kMaxPositions = 4;
constexpr std::size_t kTorsoLength = 4;

struct Offset {
  int away;     // rows away from the torso row
  int outward;  // columns outward from the torso end
};

using Segment = std::array<Offset, 4>;

constexpr std::array<Segment, kMaxPositions> kPositions{{
    {{{1, 1}, {1, 2}, {1, 3}, {1, 4}}},
    {{{2, 2}, {3, 3}, {4, 4}, {5, 5}}},
    {{{2, 1}, {3, 1}, {4, 2}, {5, 2}}},
    {{{1, 0}, {2, 0}, {3, 0}, {4, 0}}},
}};

// (row direction, column direction) per limb quadrant.
constexpr std::array<std::array<int, 2>, kMaxLimbs> kQuadrants{{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};

void validate(const SwimmerSpec& spec) {
  if (spec.limbs == 0 || spec.limbs > kMaxLimbs) {
    throw ValidationError("swimmer: limbs must be between 1 and 4");
  }
  if (spec.limb_positions == 0 || spec.limb_positions > kMaxPositions) {
    throw ValidationError("swimmer: limb_positions must be between 1 and 4");
  }
  if (spec.canvas_rows == 0 || spec.canvas_cols < kTorsoLength + 2) {
    throw ValidationError("swimmer: canvas too small");
  }
}

struct Layout {
  std::vector<std::size_t> torso;
  // limb_pixels[limb][position] -> pixel indices
  std::vector<std::vector<std::vector<std::size_t>>> limb_pixels;
};

Layout layout(const SwimmerSpec& spec) {
  validate(spec);
  const auto rows = static_cast<long>(spec.canvas_rows);
  const auto cols = static_cast<long>(spec.canvas_cols);
  const long torso_row = rows / 2;
  const long torso_first = cols / 2 - 2;
  const long torso_last = torso_first + static_cast<long>(kTorsoLength) - 1;

  Layout out;
  for (long c = torso_first; c <= torso_last; ++c) {
    out.torso.push_back(static_cast<std::size_t>(torso_row * cols + c));
  }
  out.limb_pixels.resize(spec.limbs);
  for (std::size_t limb = 0; limb < spec.limbs; ++limb) {
    const int row_dir = kQuadrants[limb][0];
    const int col_dir = kQuadrants[limb][1];
    const long joint_col = col_dir < 0 ? torso_first : torso_last;
    for (std::size_t pos = 0; pos < spec.limb_positions; ++pos) {
      std::vector<std::size_t> pixels;
      for (const Offset& o : kPositions[pos]) {
        const long r = torso_row + row_dir * o.away;
        const long c = joint_col + col_dir * o.outward;
        if (r < 0 || r >= rows || c < 0 || c >= cols) {
          throw ValidationError("swimmer: canvas " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " too small for the limb layout");
        }
        pixels.push_back(static_cast<std::size_t>(r * cols + c));
      }
      out.limb_pixels[limb].push_back(std::move(pixels));
    }
  }
  return out;
}

void require_binary(const Matrix& x, const char* what) {
  for (double v : x.values()) {
    if (v != 0.0 && v != 1.0) throw ValidationError(std::string(what) + ": entry is not 0 or 1");
  }
}

}  // namespace

std::size_t SwimmerSpec::image_count() const {
  std::size_t count = 1;
  for (std::size_t l = 0; l < limbs; ++l) count *= limb_positions;
  return count;
}

Matrix generate_swimmer(const SwimmerSpec& spec) {
  const Layout geometry = layout(spec);
  const std::size_t images = spec.image_count();
  Matrix out(spec.pixel_count(), images);
  for (std::size_t image = 0; image < images; ++image) {
    for (std::size_t p : geometry.torso) out(p, image) = 1.0;
    // Odometer digits, last limb least significant.
    std::size_t rest = image;
    for (std::size_t limb = spec.limbs; limb-- > 0;) {
      const std::size_t pos = rest % spec.limb_positions;
      rest /= spec.limb_positions;
      for (std::size_t p : geometry.limb_pixels[limb][pos]) out(p, image) = 1.0;
    }
  }
  return out;
}

std::vector<std::size_t> swimmer_torso_pixels(const SwimmerSpec& spec) {
  return layout(spec).torso;
}

Matrix invert_binary(const Matrix& x) {
  require_nonempty(x, "invert_binary");
  require_binary(x, "invert_binary");
  Matrix out = x;
  for (double& v : out.values()) v = 1.0 - v;
  return out;
}

Matrix add_noise(const Matrix& x, double epsilon, RandomSource& rng) {
  require_nonempty(x, "add_noise");
  require_finite(x, "add_noise");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("add_noise: epsilon must be a finite nonnegative number");
  }
  Matrix out = x;
  for (double& v : out.values()) v += epsilon * rng.uniform();
  return out;
}

Matrix subsample_columns(const Matrix& x, double keep_fraction, RandomSource& rng) {
  require_nonempty(x, "subsample_columns");
  if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
    throw ValidationError("subsample_columns: keep fraction must lie in (0, 1]");
  }
  const auto keep =
      static_cast<std::size_t>(std::floor(keep_fraction * static_cast<double>(x.cols()) + 0.5));
  if (keep == 0) throw ValidationError("subsample_columns: no columns would be kept");
  const auto indices = rng.sample_sorted(x.cols(), std::min(keep, x.cols()));
  return select_columns(x, indices);
}

Matrix permute_columns(const Matrix& x, RandomSource& rng) {
  require_nonempty(x, "permute_columns");
  const auto order = rng.permutation(x.cols());
  return select_columns(x, order);
}

Matrix scale_all(const Matrix& x, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("scale_all: lambda must be positive");
  }
  return scaled(x, lambda);
}

void write_pgm(const std::filesystem::path& path, std::span<const double> pixels,
               std::size_t rows, std::size_t cols) {
  if (pixels.size() != rows * cols) throw DimensionError("write_pgm: pixel count mismatch");
  double peak = 0.0;
  for (double v : pixels) peak = std::max(peak, v);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << "P2\n" << cols << ' ' << rows << "\n255\n";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = pixels[r * cols + c];
      const long level = peak > 0.0 ? std::lround(std::clamp(v / peak, 0.0, 1.0) * 255.0) : 0;
      out << (c ? " " : "") << level;
    }
    out << '\n';
  }
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace jnmf
