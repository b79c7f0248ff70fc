#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "jnmf/matrix.hpp"
#include "jnmf/random.hpp"

namespace jnmf {

/// Parameters of the synthetic Swimmer image family.
///
/// Layout on a canvas_rows x canvas_cols grid (rows r, columns c, pixel
/// index r * canvas_cols + c):
///   - torso: 4 pixels on row canvas_rows / 2, columns c0 .. c0 + 3 with
///     c0 = canvas_cols / 2 - 2;
///   - limbs attach at the torso ends and occupy one quadrant each, in the
///     order top-left, top-right, bottom-left, bottom-right;
///   - each limb is 4 pixels, drawn at one of 4 angles. With (a, b) meaning
///     "a rows away from the torso row, b columns outward from the torso end"
///     the positions are
///       0 shallow   (1,1) (1,2) (1,3) (1,4)
///       1 diagonal  (2,2) (3,3) (4,4) (5,5)
///       2 steep     (2,1) (3,1) (4,2) (5,2)
///       3 vertical  (1,0) (2,0) (3,0) (4,0)
/// No two limb pixels coincide, so every image has 4 + 4 * limbs pixels set.
/// Images are enumerated in odometer order: the last limb changes fastest.
struct SwimmerSpec {
  std::size_t canvas_rows = 11;
  std::size_t canvas_cols = 20;
  std::size_t limb_positions = 4;
  std::size_t limbs = 4;

  std::size_t image_count() const;
  std::size_t pixel_count() const { return canvas_rows * canvas_cols; }
};

/// Pixel-count x image-count binary matrix, one vectorized image per column.
Matrix generate_swimmer(const SwimmerSpec& spec = {});
/// Pixel indices of the torso shared by every image.
std::vector<std::size_t> swimmer_torso_pixels(const SwimmerSpec& spec = {});

/// 1 - x for a {0,1} matrix.
Matrix invert_binary(const Matrix& x);
/// x + epsilon * N with N i.i.d. uniform on [0, 1).
Matrix add_noise(const Matrix& x, double epsilon, RandomSource& rng);
/// round(q * n) distinct columns chosen uniformly, original order kept.
/// Rounding is half-up.
Matrix subsample_columns(const Matrix& x, double keep_fraction, RandomSource& rng);
/// x P for a uniformly random permutation P.
Matrix permute_columns(const Matrix& x, RandomSource& rng);
/// lambda * x, lambda > 0.
Matrix scale_all(const Matrix& x, double lambda);

/// Plain (P2) greyscale image of one column, entries mapped linearly so the
/// column maximum becomes 255.
void write_pgm(const std::filesystem::path& path, std::span<const double> pixels,
               std::size_t rows, std::size_t cols);

}  // namespace jnmf
