#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "senti/corpus.hpp"
#include "senti/lexicon.hpp"

namespace senti {

enum class WeightingScheme { BinaryPresence, TfIdf };

std::string_view to_string(WeightingScheme scheme);
std::optional<WeightingScheme> parse_scheme(std::string_view text);

struct VectorizeOptions {
  WeightingScheme scheme = WeightingScheme::TfIdf;
  // Replace negative idf values (doc_freq + 1 > D) by zero.
  bool clamp_idf = false;
  TextFields fields = TextFields::TitleAndBody;

  bool operator==(const VectorizeOptions&) const = default;
};

// One weight per lexicon term, in lexicon order.
struct Instance {
  Eigen::VectorXd weights;
  std::optional<Polarity> label;
};

struct InstanceSet {
  int lexicon_version = kLexiconSchemaVersion;
  Eigen::Index width = 0;
  std::vector<Instance> instances;

  std::size_t size() const { return instances.size(); }
};

/// f(t, d) / max f(w, d), the max running over lexicon terms present in d.
/// Zero when no lexicon term occurs in the document.
double term_frequency(std::string_view term, const TokenSequence& doc_tokens,
                      const FeatureLexicon& lex);

/// ln(D / (doc_freq + 1)) from the lexicon's frozen training statistics.
/// Negative when doc_freq + 1 > D, unless `clamp` is set.
double inverse_doc_frequency(std::string_view term, const FeatureLexicon& lex, bool clamp = false);

Eigen::VectorXd weigh_tokens(const TokenSequence& doc_tokens, const FeatureLexicon& lex,
                             const VectorizeOptions& options);

/// `text` is the full document (title and body already joined by the caller).
Instance vectorize_document(std::string_view text, const FeatureLexicon& lex,
                            const VectorizeOptions& options);
Instance vectorize_record(const ReviewRecord& record, const FeatureLexicon& lex,
                          const VectorizeOptions& options);
InstanceSet vectorize_corpus(const Corpus& corpus, const FeatureLexicon& lex,
                             const VectorizeOptions& options, bool attach_labels);
/// A single free-text comment, as typed by a user.
Instance vectorize_single(std::string_view text, const FeatureLexicon& lex,
                          const VectorizeOptions& options);

}  // namespace senti
