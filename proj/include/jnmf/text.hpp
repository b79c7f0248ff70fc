#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jnmf/matrix.hpp"
#include "jnmf/random.hpp"

namespace jnmf {

/// Raw documents sharing one label.
struct TextGroup {
  std::string label;
  std::vector<std::string> documents;
  /// Optional per-document names (file names); may be empty.
  std::vector<std::string> document_names;
};

/// Sparse tf-idf vector: (vocabulary index, weight) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::uint32_t, double>>;

struct CorpusGroup {
  std::string label;
  std::vector<std::string> document_names;
  std::vector<SparseVector> documents;
};

/// Corpus with a tf-idf model fitted once over all groups.
struct LabeledCorpus {
  std::vector<CorpusGroup> groups;
  /// Lexicographically sorted.
  std::vector<std::string> vocabulary;
  std::vector<std::size_t> document_frequency;
  std::vector<double> idf;
  std::size_t document_count = 0;

  const CorpusGroup& group(std::string_view label) const;
};

struct TfidfOptions {
  std::size_t max_features = 5000;
};

/// Lowercases ASCII letters, splits on every non-alphanumeric byte and drops
/// tokens shorter than two characters.
std::vector<std::string> tokenize(std::string_view text);

/// Drops newsgroup boilerplate: the leading "Key: value" header block,
/// quoted lines (starting with '>' or '|'), attribution lines ending in
/// "writes:" or "wrote:", and everything after a "--" signature marker.
std::string strip_newsgroup_boilerplate(std::string_view text);

/// Vocabulary: the max_features terms with the largest corpus-wide counts
/// (ties by term), stored sorted. idf(t) = ln((1 + D) / (1 + df(t))) + 1.
/// A document vector is count * idf, L2-normalized; empty documents give
/// the zero vector.
LabeledCorpus fit_tfidf(const std::vector<TextGroup>& groups, const TfidfOptions& options = {});

/// Vocabulary-size x sample_size matrix of tf-idf columns for a uniform
/// sample without replacement from one group.
Matrix sample_group_matrix(const LabeledCorpus& corpus, std::string_view label,
                           std::size_t sample_size, RandomSource& rng);

/// Every document of a group as a dense vocabulary-size x n matrix.
Matrix group_matrix(const LabeledCorpus& corpus, std::string_view label);

/// One group per subdirectory of `root` (sorted by name), one document per
/// regular file (sorted by name).
std::vector<TextGroup> load_text_groups(const std::filesystem::path& root,
                                        bool strip_boilerplate = false);

nlohmann::json corpus_to_json(const LabeledCorpus& corpus);
LabeledCorpus corpus_from_json(const nlohmann::json& doc);

}  // namespace jnmf
