#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace jnmf {

struct SampleStats {
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single value.
  double standard_deviation = 0.0;
  double standard_error = 0.0;
};

inline SampleStats sample_stats(std::span<const double> values) {
  SampleStats out;
  const std::size_t n = values.size();
  if (n == 0) return out;
  double total = 0.0;
  for (double v : values) total += v;
  out.mean = total / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.standard_deviation = std::sqrt(ss / static_cast<double>(n - 1));
    out.standard_error = out.standard_deviation / std::sqrt(static_cast<double>(n));
  }
  return out;
}

}  // namespace jnmf
