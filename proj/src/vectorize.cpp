#include "senti/vectorize.hpp"

#include <algorithm>
#include <cmath>

#include "senti/error.hpp"

namespace senti {
namespace {

// Occurrence count per lexicon position.
std::vector<double> count_terms(const TokenSequence& doc_tokens, const FeatureLexicon& lex) {
  std::vector<double> counts(lex.size(), 0.0);
  for (const auto& t : doc_tokens) {
    if (auto i = lex.index_of(t)) counts[*i] += 1.0;
  }
  return counts;
}

double idf_at(const FeatureLexicon& lex, std::size_t i, bool clamp) {
  const double d = static_cast<double>(lex.train_doc_count());
  const double idf = std::log(d / (static_cast<double>(lex.doc_freq()[i]) + 1.0));
  return clamp ? std::max(idf, 0.0) : idf;
}

}  // namespace

std::string_view to_string(WeightingScheme scheme) {
  return scheme == WeightingScheme::TfIdf ? "tfidf" : "binary";
}

std::optional<WeightingScheme> parse_scheme(std::string_view text) {
  if (text == "tfidf") return WeightingScheme::TfIdf;
  if (text == "binary") return WeightingScheme::BinaryPresence;
  return std::nullopt;
}

double term_frequency(std::string_view term, const TokenSequence& doc_tokens,
                      const FeatureLexicon& lex) {
  const std::size_t target = lex.require_index(term);
  const auto counts = count_terms(doc_tokens, lex);
  const double max_count = *std::max_element(counts.begin(), counts.end());
  return max_count > 0.0 ? counts[target] / max_count : 0.0;
}

double inverse_doc_frequency(std::string_view term, const FeatureLexicon& lex, bool clamp) {
  return idf_at(lex, lex.require_index(term), clamp);
}

Eigen::VectorXd weigh_tokens(const TokenSequence& doc_tokens, const FeatureLexicon& lex,
                             const VectorizeOptions& options) {
  const auto counts = count_terms(doc_tokens, lex);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(lex.size()));
  if (options.scheme == WeightingScheme::BinaryPresence) {
    for (std::size_t i = 0; i < counts.size(); ++i) w[Eigen::Index(i)] = counts[i] > 0.0 ? 1.0 : 0.0;
    return w;
  }
  const double max_count = *std::max_element(counts.begin(), counts.end());
  if (max_count == 0.0) return w;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0.0) w[Eigen::Index(i)] = (counts[i] / max_count) * idf_at(lex, i, options.clamp_idf);
  }
  return w;
}

Instance vectorize_document(std::string_view text, const FeatureLexicon& lex,
                            const VectorizeOptions& options) {
  return Instance{weigh_tokens(tokenize(text), lex, options), std::nullopt};
}

Instance vectorize_record(const ReviewRecord& record, const FeatureLexicon& lex,
                          const VectorizeOptions& options) {
  return Instance{weigh_tokens(record_tokens(record, options.fields), lex, options), std::nullopt};
}

InstanceSet vectorize_corpus(const Corpus& corpus, const FeatureLexicon& lex,
                             const VectorizeOptions& options, bool attach_labels) {
  InstanceSet set;
  set.lexicon_version = lex.schema_version();
  set.width = static_cast<Eigen::Index>(lex.size());
  set.instances.reserve(corpus.size());
  for (const auto& r : corpus.records) {
    if (attach_labels && !r.human_label) {
      throw Error(ErrorKind::UnlabeledRecord, "record " + std::to_string(r.id) + " has no label");
    }
    Instance inst = vectorize_record(r, lex, options);
    if (attach_labels) inst.label = r.human_label;
    set.instances.push_back(std::move(inst));
  }
  return set;
}

Instance vectorize_single(std::string_view text, const FeatureLexicon& lex,
                          const VectorizeOptions& options) {
  return vectorize_document(text, lex, options);
}

}  // namespace senti
