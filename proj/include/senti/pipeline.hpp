#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "senti/lexicon.hpp"
#include "senti/svm.hpp"
#include "senti/vectorize.hpp"

namespace senti {

// Everything the subcommands need; unset paths mean "not given".
struct PipelineConfig {
  std::string train_path;
  std::string test_path;
  std::string input_path;  // split: the corpus to partition
  std::string lexicon_path;
  std::string model_path;
  std::string report_path;
  std::string annotated_path;
  std::string seed_terms_path;

  VectorizeOptions vectorize;
  SvmParams svm;
  LexiconParams lexicon;

  std::uint64_t split_seed = 1;
  std::size_t train_count = 0;
  std::string host = "127.0.0.1";
  int port = 8080;
  bool json = false;
};

// Each command prints its normal output to `out`, warnings and errors to
// `err`, and returns the process exit code: 0 success, 1 internal or I/O
// error, 2 input not found, 3 validation failure.
int cmd_split(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_build_features(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_train(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_evaluate(const PipelineConfig& config, std::ostream& out, std::ostream& err);
/// Classifies each entry of `texts`, or every line of `in` when empty.
int cmd_classify(const PipelineConfig& config, const std::vector<std::string>& texts,
                 std::istream& in, std::ostream& out, std::ostream& err);
int cmd_serve(const PipelineConfig& config, std::ostream& out, std::ostream& err);
/// Renders a stored confusion matrix file (rows = machine) as a report.
int cmd_report(const std::string& matrix_path, bool json, std::ostream& out, std::ostream& err);

/// "<label>\t<pos>/<neg>=<value> ..." with values in shortest round-trip form.
std::string format_classification(const Prediction& prediction);

}  // namespace senti
