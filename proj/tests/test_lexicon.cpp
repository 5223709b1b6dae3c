#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "senti/error.hpp"
#include "senti/lexicon.hpp"

using namespace senti;

namespace {

Corpus corpus_of(std::vector<std::string> bodies) {
  Corpus c;
  std::uint64_t id = 1;
  for (auto& b : bodies) c.records.push_back({id++, "shoes", "", b, Polarity::Neutral, std::nullopt});
  return c;
}

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

const std::vector<std::string> kSeedWords = {
    "beautiful", "pretty", "cute",  "good",  "great",    "nice",         "well",
    "comfortable", "love", "like",  "happy", "glad",     "pleased",      "excited",
    "expect",    "recommend", "tight", "stiff", "poor",  "wrong",        "weird",
    "hate",      "disappointed", "stupid", "return", "ok", "okay",       "alright"};

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("senti_lex_" + name)).string();
}

}  // namespace

TEST_CASE("single document, single term") {
  const auto lex = build_lexicon(corpus_of({"good good"}), {.min_doc_freq = 1});
  CHECK(lex.terms() == std::vector<std::string>{"good"});
  CHECK(lex.doc_freq() == std::vector<std::uint64_t>{1});
  CHECK(lex.train_doc_count() == 1);
}

TEST_CASE("no surviving term is EmptyLexicon") {
  CHECK(error_kind([] { build_lexicon(corpus_of({"a b", "c d"}), {.min_doc_freq = 2}); }) ==
        ErrorKind::EmptyLexicon);
}

TEST_CASE("unlabeled training record is rejected") {
  auto c = corpus_of({"fine"});
  c.records[0].human_label.reset();
  CHECK(error_kind([&] { build_lexicon(c, {.min_doc_freq = 1}); }) == ErrorKind::UnlabeledRecord);
}

TEST_CASE("seed terms are always present exactly once") {
  const auto c = corpus_of({"I love it good", "good shoes love", "nice"});
  LexiconParams p;
  p.min_doc_freq = 100;
  p.seed_terms = kSeedWords;
  p.seed_terms.push_back("Love");  // duplicate after normalization
  const auto lex = build_lexicon(c, p);
  CHECK(lex.size() == kSeedWords.size());
  for (const auto& s : kSeedWords) CHECK(lex.index_of(s).has_value());
  // Ranked by document frequency, then lexicographically.
  CHECK(lex.terms()[0] == "good");
  CHECK(lex.terms()[1] == "love");
  CHECK(lex.terms()[2] == "nice");
  CHECK(lex.doc_freq()[lex.require_index("good")] == 2);
  CHECK(lex.doc_freq()[lex.require_index("hate")] == 0);
}

TEST_CASE("top_k keeps the most frequent candidates, ties lexicographic") {
  const auto c = corpus_of({"a b c", "a b d", "a c d", "e"});
  LexiconParams p;
  p.min_doc_freq = 1;
  p.top_k = 3;
  const auto lex = build_lexicon(c, p);
  // df: a=3, b=2, c=2, d=2, e=1 -> a, then b, c by name.
  CHECK(lex.terms() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("title tokens count unless body-only") {
  Corpus c = corpus_of({"plain", "plain"});
  c.records[0].title = "Great";
  const auto both = build_lexicon(c, {.min_doc_freq = 1});
  CHECK(both.index_of("great").has_value());
  const auto body = build_lexicon(c, {.min_doc_freq = 1, .fields = TextFields::BodyOnly});
  CHECK_FALSE(body.index_of("great").has_value());
}

TEST_CASE("doc_freq matches a brute-force count and building is deterministic") {
  std::mt19937 rng(11);
  const std::vector<std::string> words = {"good", "bad", "ok", "nice", "hate", "shoe"};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> bodies;
    const int docs = 1 + int(rng() % 6);
    for (int d = 0; d < docs; ++d) {
      std::string b;
      const int len = 1 + int(rng() % 5);
      for (int k = 0; k < len; ++k) b += words[rng() % words.size()] + " ";
      bodies.push_back(b);
    }
    const auto c = corpus_of(bodies);
    const auto lex = build_lexicon(c, {.min_doc_freq = 1});
    CHECK(lex == build_lexicon(c, {.min_doc_freq = 1}));
    for (std::size_t i = 0; i < lex.size(); ++i) {
      std::uint64_t count = 0;
      for (const auto& b : bodies) {
        std::istringstream ss(b);
        std::set<std::string> seen;
        for (std::string w; ss >> w;) seen.insert(w);
        count += seen.count(lex.terms()[i]);
      }
      CHECK(lex.doc_freq()[i] == count);
      CHECK(lex.doc_freq()[i] <= lex.train_doc_count());
    }
  }
}

TEST_CASE("save then load round-trips") {
  LexiconParams p;
  p.min_doc_freq = 1;
  p.seed_terms = kSeedWords;
  const auto lex = build_lexicon(corpus_of({"good shoes", "bad fit", "ok i guess"}), p);
  const auto path = temp_path("roundtrip.txt");
  save_lexicon(lex, path);
  CHECK(load_lexicon(path) == lex);
  std::filesystem::remove(path);
}

TEST_CASE("hand-written file loads in file order") {
  std::istringstream in("version 1\nD 5\nzeta 1\nalpha 4\nmid 0\n");
  const auto lex = read_lexicon(in);
  CHECK(lex.terms() == std::vector<std::string>{"zeta", "alpha", "mid"});
  CHECK(lex.doc_freq() == std::vector<std::uint64_t>{1, 4, 0});
  CHECK(lex.train_doc_count() == 5);
}

TEST_CASE("malformed lexicon files") {
  const auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_lexicon(in);
  };
  CHECK(error_kind([&] { read("version 2\nD 5\na 1\n"); }) == ErrorKind::FormatVersionMismatch);
  CHECK(error_kind([&] { read("D 5\na 1\n"); }) == ErrorKind::FormatError);
  CHECK(error_kind([&] { read("version 1\nD 2\na 3\n"); }) == ErrorKind::FormatError);
  CHECK(error_kind([&] { read("version 1\nD 2\na 1\na 1\n"); }) == ErrorKind::FormatError);
  CHECK(error_kind([&] { read("version 1\nD 2\nA 1\n"); }) == ErrorKind::FormatError);
  CHECK(error_kind([&] { read("version 1\nD 2\n"); }) == ErrorKind::EmptyLexicon);
  CHECK(error_kind([] { load_lexicon("/nonexistent/lexicon.txt"); }) == ErrorKind::NotFound);
}

TEST_CASE("bundled seed file holds the default sentiment words") {
  const auto seeds = load_term_list(std::string(SENTI_DATA_DIR) + "/seed_terms.txt");
  CHECK(seeds == kSeedWords);
}
