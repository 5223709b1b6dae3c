// Command-line front end: features build, train, evaluate, classify, serve,
// plus split and report helpers.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "senti/pipeline.hpp"

namespace {

void add_scheme_flags(CLI::App* cmd, senti::PipelineConfig& cfg, std::string& scheme,
                      bool& body_only) {
  cmd->add_option("--scheme", scheme, "Weighting scheme")
      ->check(CLI::IsMember({"tfidf", "binary"}))
      ->capture_default_str();
  cmd->add_flag("--clamp-idf", cfg.vectorize.clamp_idf, "Zero out negative idf values");
  cmd->add_flag("--body-only", body_only, "Use only the review body, not the title");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-class review sentiment classifier (TF-IDF + pairwise linear SVM)"};
  app.require_subcommand(1);

  senti::PipelineConfig cfg;
  std::string scheme = "tfidf";
  bool body_only = false;
  std::optional<std::size_t> top_k;
  std::optional<std::int64_t> max_iters;
  std::vector<std::string> texts;
  std::string matrix_path;

  auto* split = app.add_subcommand("split", "Randomly partition a corpus into train and test CSVs");
  split->add_option("--input", cfg.input_path, "Corpus CSV to split")->required();
  split->add_option("--train-count", cfg.train_count, "Records for the training part")->required();
  split->add_option("--seed", cfg.split_seed, "PRNG seed")->capture_default_str();
  split->add_option("--train", cfg.train_path, "Output training CSV")->required();
  split->add_option("--test", cfg.test_path, "Output test CSV")->required();

  auto* features = app.add_subcommand("features", "Feature lexicon commands");
  features->require_subcommand(1);
  auto* build = features->add_subcommand("build", "Build the feature lexicon from a training CSV");
  build->add_option("--train", cfg.train_path, "Labeled training CSV")->required();
  build->add_option("--lexicon", cfg.lexicon_path, "Output lexicon file")->required();
  build->add_option("--min-doc-freq", cfg.lexicon.min_doc_freq, "Minimum document frequency")
      ->capture_default_str();
  build->add_option("--top-k", top_k, "Keep only the k most frequent candidates");
  build->add_option("--seed-terms", cfg.seed_terms_path, "File of terms always included");
  build->add_flag("--body-only", body_only, "Use only the review body, not the title");

  auto* train = app.add_subcommand("train", "Train the pairwise SVM model");
  train->add_option("--train", cfg.train_path, "Labeled training CSV")->required();
  train->add_option("--lexicon", cfg.lexicon_path, "Lexicon file")->required();
  train->add_option("--model", cfg.model_path, "Output model file")->required();
  add_scheme_flags(train, cfg, scheme, body_only);
  train->add_option("-C", cfg.svm.C, "Soft-margin penalty")->capture_default_str();
  train->add_option("--tol", cfg.svm.tol, "KKT tolerance")->capture_default_str();
  train->add_option("--max-passes", cfg.svm.max_passes, "Consecutive unchanged sweeps before stop")
      ->capture_default_str();
  train->add_option("--max-iters", max_iters, "Hard cap on pair updates (default 10*n*1000)");

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a model on a labeled test CSV");
  evaluate->add_option("--model", cfg.model_path, "Model file")->required();
  evaluate->add_option("--test", cfg.test_path, "Labeled test CSV")->required();
  evaluate->add_option("--report", cfg.report_path, "Also write the report here");
  evaluate->add_option("--annotated", cfg.annotated_path, "Write the test CSV with machine labels");
  evaluate->add_flag("--json", cfg.json, "Emit the report as JSON");

  auto* classify = app.add_subcommand("classify", "Classify text arguments or stdin lines");
  classify->add_option("--model", cfg.model_path, "Model file")->required();
  classify->add_option("text", texts, "Texts to classify (default: read stdin)");

  auto* serve = app.add_subcommand("serve", "Serve POST /classify and GET /health");
  serve->add_option("--model", cfg.model_path, "Model file")->required();
  serve->add_option("--port", cfg.port, "TCP port")->capture_default_str();
  serve->add_option("--host", cfg.host, "Bind address")->capture_default_str();

  auto* rep = app.add_subcommand("report", "Render a stored confusion matrix (rows = machine)");
  rep->add_option("--matrix", matrix_path, "3x3 count matrix file")->required();
  rep->add_flag("--json", cfg.json, "Emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  cfg.vectorize.scheme = *senti::parse_scheme(scheme);
  cfg.vectorize.fields =
      body_only ? senti::TextFields::BodyOnly : senti::TextFields::TitleAndBody;
  cfg.lexicon.top_k = top_k;
  cfg.svm.max_iters = max_iters;

  if (*split) return senti::cmd_split(cfg, std::cout, std::cerr);
  if (*build) return senti::cmd_build_features(cfg, std::cout, std::cerr);
  if (*train) return senti::cmd_train(cfg, std::cout, std::cerr);
  if (*evaluate) return senti::cmd_evaluate(cfg, std::cout, std::cerr);
  if (*classify) return senti::cmd_classify(cfg, texts, std::cin, std::cout, std::cerr);
  if (*serve) return senti::cmd_serve(cfg, std::cout, std::cerr);
  if (*rep) return senti::cmd_report(matrix_path, cfg.json, std::cout, std::cerr);
  return 1;
}
