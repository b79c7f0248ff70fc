#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jnmf/matrix.hpp"

namespace jnmf {

struct CsvOptions {
  /// First line holds column labels rather than numbers.
  bool header = false;
};

/// Reads a rectangular numeric CSV (',' delimiter, '.' decimal point).
/// Blank lines are ignored. Negative values are accepted here; callers that
/// need nonnegative data validate at the point of use.
Matrix matrix_from_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// Same as matrix_from_csv but also returns the header labels, if any.
Matrix matrix_from_csv(const std::filesystem::path& path, const CsvOptions& options,
                       std::vector<std::string>& labels);

/// Writes every entry in shortest round-trip form, so reading the file back
/// reproduces the matrix exactly.
void matrix_to_csv(const Matrix& m, const std::filesystem::path& path,
                   const std::vector<std::string>& labels = {});

/// Parses CSV text that is already in memory. `source` names it in errors.
Matrix parse_csv(const std::string& text, const CsvOptions& options,
                 std::vector<std::string>& labels, const std::string& source = "<memory>");

}  // namespace jnmf
