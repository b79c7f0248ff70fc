#include "jnmf/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "jnmf/error.hpp"

namespace jnmf {

namespace {

bool is_alnum(unsigned char ch) { return std::isalnum(ch) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_header(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    const auto ch = static_cast<unsigned char>(line[i]);
    if (!(std::isalnum(ch) || ch == '-')) return false;
  }
  return true;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

const CorpusGroup& LabeledCorpus::group(std::string_view label) const {
  for (const auto& g : groups) {
    if (g.label == label) return g;
  }
  throw ValidationError("unknown label '" + std::string(label) + "'");
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.size() >= 2) tokens.push_back(current);
    current.clear();
  };
  for (char raw : text) {
    const auto ch = static_cast<unsigned char>(raw);
    if (ch < 0x80 && is_alnum(ch)) {
      current.push_back(static_cast<char>(std::tolower(ch)));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::string strip_newsgroup_boilerplate(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(start, end - start));
    if (nl == std::string_view::npos || nl + 1 == text.size()) break;
    start = nl + 1;
  }

  std::size_t first = 0;
  if (!lines.empty() && looks_like_header(lines[0])) {
    while (first < lines.size() && !trim(lines[first]).empty()) ++first;
    while (first < lines.size() && trim(lines[first]).empty()) ++first;
  }
  std::size_t last = lines.size();
  for (std::size_t i = lines.size(); i-- > first;) {
    const auto t = trim(lines[i]);
    if (t == "--") {
      last = i;
      break;
    }
  }

  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    const auto t = trim(lines[i]);
    if (!t.empty() && (t.front() == '>' || t.front() == '|')) continue;
    if (ends_with(t, "writes:") || ends_with(t, "wrote:")) continue;
    out.append(lines[i]);
    out.push_back('\n');
  }
  return out;
}

LabeledCorpus fit_tfidf(const std::vector<TextGroup>& groups, const TfidfOptions& options) {
  if (groups.empty()) throw ValidationError("fit_tfidf: no groups");
  if (options.max_features == 0) throw ValidationError("fit_tfidf: max_features must be positive");

  std::vector<std::vector<std::unordered_map<std::string, std::size_t>>> counts(groups.size());
  std::unordered_map<std::string, std::size_t> total_count;
  std::unordered_map<std::string, std::size_t> doc_freq;
  std::size_t documents = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].label.empty()) throw ValidationError("fit_tfidf: empty group label");
    for (std::size_t h = 0; h < g; ++h) {
      if (groups[h].label == groups[g].label) {
        throw ValidationError("fit_tfidf: duplicate label '" + groups[g].label + "'");
      }
    }
    for (const auto& doc : groups[g].documents) {
      auto& c = counts[g].emplace_back();
      for (auto& tok : tokenize(doc)) ++c[tok];
      for (const auto& [term, n] : c) {
        total_count[term] += n;
        ++doc_freq[term];
      }
      ++documents;
    }
  }
  if (documents == 0) throw ValidationError("fit_tfidf: corpus has no documents");

  std::vector<std::pair<std::string, std::size_t>> ranked(total_count.begin(), total_count.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > options.max_features) ranked.resize(options.max_features);

  LabeledCorpus corpus;
  corpus.document_count = documents;
  for (const auto& [term, n] : ranked) corpus.vocabulary.push_back(term);
  std::sort(corpus.vocabulary.begin(), corpus.vocabulary.end());
  std::unordered_map<std::string, std::uint32_t> index;
  const double d = static_cast<double>(documents);
  for (std::size_t i = 0; i < corpus.vocabulary.size(); ++i) {
    const auto& term = corpus.vocabulary[i];
    index[term] = static_cast<std::uint32_t>(i);
    const std::size_t df = doc_freq[term];
    corpus.document_frequency.push_back(df);
    corpus.idf.push_back(std::log((1.0 + d) / (1.0 + static_cast<double>(df))) + 1.0);
  }

  for (std::size_t g = 0; g < groups.size(); ++g) {
    CorpusGroup out{groups[g].label, groups[g].document_names, {}};
    if (out.document_names.empty()) {
      for (std::size_t j = 0; j < groups[g].documents.size(); ++j) {
        out.document_names.push_back(std::to_string(j));
      }
    }
    if (out.document_names.size() != groups[g].documents.size()) {
      throw ValidationError("fit_tfidf: group '" + out.label + "' has mismatched document names");
    }
    for (const auto& c : counts[g]) {
      SparseVector v;
      for (const auto& [term, n] : c) {
        const auto it = index.find(term);
        if (it == index.end()) continue;
        v.emplace_back(it->second, static_cast<double>(n) * corpus.idf[it->second]);
      }
      std::sort(v.begin(), v.end());
      double norm = 0.0;
      for (const auto& [i, w] : v) norm += w * w;
      norm = std::sqrt(norm);
      if (norm > 0.0) {
        for (auto& entry : v) entry.second /= norm;
      }
      out.documents.push_back(std::move(v));
    }
    corpus.groups.push_back(std::move(out));
  }
  return corpus;
}

namespace {

Matrix dense_columns(const LabeledCorpus& corpus, const CorpusGroup& group,
                     const std::vector<std::size_t>& picks) {
  if (corpus.vocabulary.empty()) throw ValidationError("corpus vocabulary is empty");
  Matrix out(corpus.vocabulary.size(), picks.size());
  for (std::size_t j = 0; j < picks.size(); ++j) {
    for (const auto& [i, w] : group.documents[picks[j]]) out(i, j) = w;
  }
  return out;
}

}  // namespace

Matrix sample_group_matrix(const LabeledCorpus& corpus, std::string_view label,
                           std::size_t sample_size, RandomSource& rng) {
  const CorpusGroup& group = corpus.group(label);
  if (sample_size == 0) throw ValidationError("sample_group_matrix: sample size must be positive");
  if (group.documents.size() < sample_size) {
    throw ValidationError("group '" + group.label + "' has " +
                          std::to_string(group.documents.size()) + " documents, " +
                          std::to_string(sample_size) + " requested");
  }
  return dense_columns(corpus, group, rng.sample_sorted(group.documents.size(), sample_size));
}

Matrix group_matrix(const LabeledCorpus& corpus, std::string_view label) {
  const CorpusGroup& group = corpus.group(label);
  if (group.documents.empty()) throw ValidationError("group '" + group.label + "' is empty");
  std::vector<std::size_t> all(group.documents.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return dense_columns(corpus, group, all);
}

std::vector<TextGroup> load_text_groups(const std::filesystem::path& root, bool strip_boilerplate) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError("data directory '" + root.string() + "' does not exist");
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());

  std::vector<TextGroup> groups;
  for (const auto& dir : dirs) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    TextGroup g{dir.filename().string(), {}, {}};
    for (const auto& f : files) {
      std::string text = read_file(f);
      g.documents.push_back(strip_boilerplate ? strip_newsgroup_boilerplate(text) : std::move(text));
      g.document_names.push_back(f.filename().string());
    }
    groups.push_back(std::move(g));
  }
  if (groups.empty()) throw ValidationError("no label directories under '" + root.string() + "'");
  return groups;
}

nlohmann::json corpus_to_json(const LabeledCorpus& corpus) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : corpus.groups) {
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& v : g.documents) {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& [i, w] : v) entries.push_back({i, w});
      docs.push_back(std::move(entries));
    }
    groups.push_back({{"label", g.label}, {"document_names", g.document_names}, {"documents", docs}});
  }
  return {
      {"format", "jnmf-corpus/1"},
      {"document_count", corpus.document_count},
      {"vocabulary", corpus.vocabulary},
      {"document_frequency", corpus.document_frequency},
      {"idf", corpus.idf},
      {"groups", std::move(groups)},
  };
}

LabeledCorpus corpus_from_json(const nlohmann::json& doc) {
  try {
    if (doc.value("format", std::string()) != "jnmf-corpus/1") {
      throw ParseError("corpus: missing or unsupported format tag");
    }
    LabeledCorpus corpus;
    corpus.document_count = doc.at("document_count").get<std::size_t>();
    corpus.vocabulary = doc.at("vocabulary").get<std::vector<std::string>>();
    corpus.document_frequency = doc.at("document_frequency").get<std::vector<std::size_t>>();
    corpus.idf = doc.at("idf").get<std::vector<double>>();
    if (corpus.document_frequency.size() != corpus.vocabulary.size() ||
        corpus.idf.size() != corpus.vocabulary.size()) {
      throw ParseError("corpus: vocabulary tables have different lengths");
    }
    for (const auto& g : doc.at("groups")) {
      CorpusGroup group;
      group.label = g.at("label").get<std::string>();
      group.document_names = g.at("document_names").get<std::vector<std::string>>();
      for (const auto& d : g.at("documents")) {
        SparseVector v;
        for (const auto& e : d) {
          const auto i = e.at(0).get<std::uint32_t>();
          const double w = e.at(1).get<double>();
          if (i >= corpus.vocabulary.size() || !(w >= 0.0) || !std::isfinite(w)) {
            throw ParseError("corpus: invalid entry in group '" + group.label + "'");
          }
          v.emplace_back(i, w);
        }
        group.documents.push_back(std::move(v));
      }
      corpus.groups.push_back(std::move(group));
    }
    return corpus;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("corpus: ") + e.what());
  }
}

}  // namespace jnmf
