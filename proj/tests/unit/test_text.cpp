#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "jnmf/error.hpp"
#include "jnmf/text.hpp"

namespace fs = std::filesystem;
using jnmf::TextGroup;

namespace {

double weight(const jnmf::SparseVector& v, std::uint32_t term) {
  for (const auto& [t, w] : v) {
    if (t == term) return w;
  }
  return 0.0;
}

std::uint32_t term_index(const jnmf::LabeledCorpus& c, const std::string& term) {
  const auto it = std::find(c.vocabulary.begin(), c.vocabulary.end(), term);
  REQUIRE(it != c.vocabulary.end());
  return static_cast<std::uint32_t>(it - c.vocabulary.begin());
}

}  // namespace

TEST_CASE("tokenize") {
  CHECK(jnmf::tokenize("Hello, World! a 42x re-use") ==
        std::vector<std::string>{"hello", "world", "42x", "re", "use"});
  CHECK(jnmf::tokenize("").empty());
  CHECK(jnmf::tokenize("caf\xc3\xa9 ok") == std::vector<std::string>{"caf", "ok"});
}

TEST_CASE("strip newsgroup boilerplate") {
  const std::string post =
      "From: someone@example.com\n"
      "Subject: engines\n"
      "\n"
      "someone@example.com writes:\n"
      "> quoted text\n"
      "| also quoted\n"
      "The body line.\n"
      "--\n"
      "signature line\n";
  CHECK(jnmf::strip_newsgroup_boilerplate(post) == "The body line.\n");
  CHECK(jnmf::strip_newsgroup_boilerplate("plain text\n") == "plain text\n");
}

TEST_CASE("tf-idf hand computation") {
  const std::vector<TextGroup> words{{"g", {"aa bb", "aa"}, {}}};
  const auto c = jnmf::fit_tfidf(words);
  CHECK(c.vocabulary == std::vector<std::string>{"aa", "bb"});
  CHECK(c.document_count == 2);
  CHECK(c.document_frequency == std::vector<std::size_t>{2, 1});
  CHECK(c.idf[0] == doctest::Approx(1.0));
  CHECK(c.idf[1] == doctest::Approx(std::log(1.5) + 1.0));
  const double norm = std::hypot(1.0, std::log(1.5) + 1.0);
  const auto& doc1 = c.groups[0].documents[0];
  CHECK(weight(doc1, 0) == doctest::Approx(1.0 / norm));
  CHECK(weight(doc1, 1) == doctest::Approx((std::log(1.5) + 1.0) / norm));
  CHECK(weight(c.groups[0].documents[1], 0) == doctest::Approx(1.0));
}

TEST_CASE("tf-idf properties") {
  const std::vector<TextGroup> groups{
      {"x", {"engine engine wheel", "engine", ""}, {}},
      {"y", {"orbit rocket engine", "orbit orbit"}, {}}};
  const auto c = jnmf::fit_tfidf(groups);
  CHECK(c.idf[term_index(c, "rocket")] > c.idf[term_index(c, "engine")]);
  CHECK(c.groups[0].documents[2].empty());
  for (const auto& g : c.groups) {
    for (const auto& d : g.documents) {
      double ss = 0.0;
      for (const auto& [t, w] : d) {
        CHECK(w >= 0.0);
        ss += w * w;
      }
      CHECK((d.empty() || std::abs(ss - 1.0) < 1e-12));
    }
  }
  const auto same = jnmf::fit_tfidf({{"g", {"word", "word"}, {}}});
  CHECK(same.groups[0].documents[0] == same.groups[0].documents[1]);

  const auto capped = jnmf::fit_tfidf(groups, {2});
  CHECK(capped.vocabulary == std::vector<std::string>{"engine", "orbit"});

  CHECK_THROWS_AS(jnmf::fit_tfidf({}), jnmf::ValidationError);
  CHECK_THROWS_AS(jnmf::fit_tfidf({{"a", {"x1"}, {}}, {"a", {"x2"}, {}}}), jnmf::ValidationError);
}

TEST_CASE("group sampling") {
  std::vector<std::string> docs;
  for (int i = 0; i < 10; ++i) docs.push_back("doc" + std::to_string(i) + " common");
  const auto c = jnmf::fit_tfidf({{"g", docs, {}}, {"h", {"other words"}, {}}});
  const auto full = jnmf::group_matrix(c, "g");
  CHECK(full.rows() == c.vocabulary.size());
  CHECK(full.cols() == 10);

  jnmf::RandomSource a(5), b(5);
  const auto s1 = jnmf::sample_group_matrix(c, "g", 4, a);
  CHECK(s1 == jnmf::sample_group_matrix(c, "g", 4, b));
  CHECK(s1.cols() == 4);
  for (std::size_t col = 0; col < 4; ++col) {
    double ss = 0.0;
    for (double v : s1.column(col)) ss += v * v;
    CHECK(ss == doctest::Approx(1.0));
  }
  jnmf::RandomSource r(1);
  const auto all = jnmf::sample_group_matrix(c, "g", 10, r);
  std::multiset<std::vector<double>> x, y;
  for (std::size_t col = 0; col < 10; ++col) {
    x.insert(all.column(col));
    y.insert(full.column(col));
  }
  CHECK(x == y);
  CHECK_THROWS_AS(jnmf::sample_group_matrix(c, "nope", 1, r), jnmf::ValidationError);
  CHECK_THROWS_AS(jnmf::sample_group_matrix(c, "h", 2, r), jnmf::ValidationError);
}

TEST_CASE("corpus directory loading and json round trip") {
  const fs::path root = fs::temp_directory_path() / "jnmf_unit" / "corpus";
  fs::remove_all(root);
  fs::create_directories(root / "alpha");
  fs::create_directories(root / "beta");
  std::ofstream(root / "alpha" / "1.txt") << "From: a@b\n\nrocket orbit\n";
  std::ofstream(root / "alpha" / "2.txt") << "rocket launch\n";
  std::ofstream(root / "beta" / "1.txt") << "engine wheel\n";

  const auto raw = jnmf::load_text_groups(root);
  REQUIRE(raw.size() == 2);
  CHECK(raw[0].label == "alpha");
  CHECK(raw[0].documents.size() == 2);
  CHECK(raw[0].document_names == std::vector<std::string>{"1.txt", "2.txt"});
  const auto stripped = jnmf::load_text_groups(root, true);
  CHECK(stripped[0].documents[0] == "rocket orbit\n");

  const auto corpus = jnmf::fit_tfidf(stripped);
  const auto back = jnmf::corpus_from_json(jnmf::corpus_to_json(corpus));
  CHECK(back.vocabulary == corpus.vocabulary);
  CHECK(back.idf == corpus.idf);
  CHECK(back.document_frequency == corpus.document_frequency);
  CHECK(back.document_count == corpus.document_count);
  CHECK(jnmf::group_matrix(back, "beta") == jnmf::group_matrix(corpus, "beta"));

  CHECK_THROWS_AS(jnmf::load_text_groups(root / "missing"), jnmf::IoError);
  CHECK_THROWS_AS(jnmf::corpus_from_json(nlohmann::json{{"format", "other"}}), jnmf::ParseError);
}
