#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/tokenize.hpp"

namespace senti {

enum class TextFields { TitleAndBody, BodyOnly };

/// Tokens of the text a record contributes: title then body, or body alone.
TokenSequence record_tokens(const ReviewRecord& record, TextFields fields);

inline constexpr int kLexiconSchemaVersion = 1;

// Ordered feature vocabulary with document frequencies frozen from the
// training corpus. Positions in `terms` are the instance vector positions.
class FeatureLexicon {
 public:
  FeatureLexicon() = default;
  FeatureLexicon(std::vector<std::string> terms, std::vector<std::uint64_t> doc_freq,
                 std::uint64_t train_doc_count);

  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<std::uint64_t>& doc_freq() const { return doc_freq_; }
  std::uint64_t train_doc_count() const { return train_doc_count_; }
  int schema_version() const { return kLexiconSchemaVersion; }
  std::size_t size() const { return terms_.size(); }

  std::optional<std::size_t> index_of(std::string_view term) const;
  /// Throws UnknownTerm when the term is not part of the lexicon.
  std::size_t require_index(std::string_view term) const;

  friend bool operator==(const FeatureLexicon& a, const FeatureLexicon& b) {
    return a.terms_ == b.terms_ && a.doc_freq_ == b.doc_freq_ &&
           a.train_doc_count_ == b.train_doc_count_;
  }

 private:
  std::vector<std::string> terms_;
  std::vector<std::uint64_t> doc_freq_;
  std::uint64_t train_doc_count_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LexiconParams {
  std::uint64_t min_doc_freq = 3;
  std::optional<std::size_t> top_k;
  std::vector<std::string> seed_terms;
  TextFields fields = TextFields::TitleAndBody;
};

/// Selects the vocabulary from a labeled training corpus.
///
/// Candidates are all tokens whose document frequency reaches
/// `min_doc_freq`; `top_k` then keeps the most frequent ones (ties broken
/// lexicographically). Seed terms are always added. The result is ordered by
/// descending document frequency, then lexicographically.
FeatureLexicon build_lexicon(const Corpus& train, const LexiconParams& params);

void write_lexicon(const FeatureLexicon& lex, std::ostream& out);
/// Reads `version`, `D` and then `term_count` term lines, or every remaining
/// line when `term_count` is empty.
FeatureLexicon read_lexicon(std::istream& in, std::optional<std::size_t> term_count = {});

void save_lexicon(const FeatureLexicon& lex, const std::string& path);
FeatureLexicon load_lexicon(const std::string& path);

/// One term per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> load_term_list(const std::string& path);

}  // namespace senti
