#include "jnmf/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "jnmf/error.hpp"

namespace jnmf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_number(std::string_view field, const std::string& source, std::size_t line_no) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": non-numeric field '" +
                     std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": non-finite value '" +
                     std::string(field) + "'");
  }
  return value;
}

}  // namespace

Matrix parse_csv(const std::string& text, const CsvOptions& options,
                 std::vector<std::string>& labels, const std::string& source) {
  labels.clear();
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  bool header_pending = options.header;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (header_pending) {
      header_pending = false;
      for (auto f : fields) labels.emplace_back(f);
      cols = fields.size();
      continue;
    }
    if (cols == 0) cols = fields.size();
    if (fields.size() != cols) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": ragged row, expected " +
                       std::to_string(cols) + " fields, found " + std::to_string(fields.size()));
    }
    for (auto f : fields) values.push_back(parse_number(f, source, line_no));
    ++rows;
  }
  if (rows == 0) throw ParseError(source + ": no data rows");
  return Matrix(rows, cols, std::move(values));
}

Matrix matrix_from_csv(const std::filesystem::path& path, const CsvOptions& options,
                       std::vector<std::string>& labels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return parse_csv(buffer.str(), options, labels, path.string());
}

Matrix matrix_from_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::vector<std::string> labels;
  return matrix_from_csv(path, options, labels);
}

void matrix_to_csv(const Matrix& m, const std::filesystem::path& path,
                   const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != m.cols()) {
    throw DimensionError("matrix_to_csv: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(m.cols()) + " columns");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");

  std::string line;
  char buf[32];
  if (!labels.empty()) {
    for (std::size_t c = 0; c < labels.size(); ++c) {
      if (c) line += ',';
      line += labels[c];
    }
    line += '\n';
    out << line;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    line.clear();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) line += ',';
      const auto res = std::to_chars(buf, buf + sizeof buf, m(r, c));
      line.append(buf, res.ptr);
    }
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace jnmf
