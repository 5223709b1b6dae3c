#include "senti/pipeline.hpp"

#include <charconv>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "senti/corpus.hpp"
#include "senti/error.hpp"
#include "senti/eval.hpp"
#include "senti/model_io.hpp"
#include "senti/service.hpp"

namespace senti {
namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

void require_path(const std::string& path, const char* flag) {
  if (path.empty()) throw Error(ErrorKind::InvalidParams, std::string(flag) + " is required");
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string format_classification(const Prediction& prediction) {
  std::string line(to_string(prediction.label));
  line += '\t';
  for (std::size_t i = 0; i < prediction.decisions.size(); ++i) {
    const auto& d = prediction.decisions[i];
    if (i) line += ' ';
    line += pair_name(d.pos, d.neg) + "=" + shortest(d.value);
  }
  return line;
}

int cmd_split(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_path(config.input_path, "--input");
    require_path(config.train_path, "--train");
    require_path(config.test_path, "--test");
    const Corpus all = load_corpus(config.input_path, false);
    const auto [train, test] = split_corpus(all, config.train_count, config.split_seed);
    save_corpus(train, config.train_path);
    save_corpus(test, config.test_path);
    out << "split " << all.size() << " records into " << train.size() << " train / "
        << test.size() << " test (seed " << config.split_seed << ")\n";
    return 0;
  });
}

int cmd_build_features(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_path(config.train_path, "--train");
    require_path(config.lexicon_path, "--lexicon");
    const Corpus train = load_corpus(config.train_path, true);
    LexiconParams params = config.lexicon;
    params.fields = config.vectorize.fields;
    if (!config.seed_terms_path.empty()) {
      const auto seeds = load_term_list(config.seed_terms_path);
      params.seed_terms.insert(params.seed_terms.end(), seeds.begin(), seeds.end());
    }
    const FeatureLexicon lex = build_lexicon(train, params);
    save_lexicon(lex, config.lexicon_path);
    out << "lexicon: " << lex.size() << " terms from " << lex.train_doc_count()
        << " training documents -> " << config.lexicon_path << '\n';
    out << "top terms:";
    for (std::size_t i = 0; i < std::min<std::size_t>(10, lex.size()); ++i) {
      out << ' ' << lex.terms()[i] << '(' << lex.doc_freq()[i] << ')';
    }
    out << '\n';
    return 0;
  });
}

int cmd_train(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_path(config.train_path, "--train");
    require_path(config.lexicon_path, "--lexicon");
    require_path(config.model_path, "--model");
    validate(config.svm);
    const Corpus train = load_corpus(config.train_path, true);
    const FeatureLexicon lex = load_lexicon(config.lexicon_path);
    const InstanceSet data = vectorize_corpus(train, lex, config.vectorize, true);
    const MulticlassModel model = train_multiclass(data, lex, config.vectorize, config.svm);
    save_model(model, config.model_path);

    out << "trained on " << data.size() << " instances, " << lex.size() << " features ("
        << to_string(config.vectorize.scheme) << ")\n";
    for (const auto& m : model.pairwise) {
      out << "  " << pair_name(m.pos_label, m.neg_label) << ": n=" << m.training_size
          << " support_vectors=" << m.stats.support_vectors
          << " at_bound=" << m.stats.bound_support_vectors << " margin=" << m.stats.margin
          << " iterations=" << m.stats.iterations << " kkt=" << m.stats.max_kkt_violation << '\n';
      if (!m.stats.converged) {
        err << "warning: " << pair_name(m.pos_label, m.neg_label)
            << " did not converge (iteration cap reached); model written anyway\n";
      }
    }
    out << "model -> " << config.model_path << '\n';
    return 0;
  });
}

int cmd_evaluate(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_path(config.model_path, "--model");
    require_path(config.test_path, "--test");
    const MulticlassModel model = load_model(config.model_path);
    Corpus test = load_corpus(config.test_path, false);
    for (const auto& r : test.records) {
      if (!r.human_label) {
        throw Error(ErrorKind::MissingLabel, "labels required for evaluation (record " +
                                                 std::to_string(r.id) + " has none)");
      }
    }
    std::vector<MachineHuman> pairs;
    pairs.reserve(test.size());
    for (auto& r : test.records) {
      const auto x = vectorize_record(r, model.lexicon, model.options);
      r.machine_label = predict(model, x.weights).label;
      pairs.push_back({*r.machine_label, *r.human_label});
    }
    if (!config.annotated_path.empty()) save_corpus(test, config.annotated_path);

    const EvalReport rep = report(build_confusion(pairs));
    const std::string text = config.json ? render_json(rep) : render_text(rep);
    out << text;
    if (!config.report_path.empty()) write_text_file(config.report_path, text);
    return 0;
  });
}

int cmd_classify(const PipelineConfig& config, const std::vector<std::string>& texts,
                 std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_path(config.model_path, "--model");
    const MulticlassModel model = load_model(config.model_path);
    if (!texts.empty()) {
      for (const auto& t : texts) out << format_classification(classify_text(model, t)) << '\n';
      return 0;
    }
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      out << format_classification(classify_text(model, line)) << '\n';
    }
    return 0;
  });
}

namespace {
ClassifyServer* active_server = nullptr;
extern "C" void stop_active_server(int) {
  if (active_server) active_server->stop();
}
}  // namespace

int cmd_serve(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_path(config.model_path, "--model");
    auto model = std::make_shared<const MulticlassModel>(load_model(config.model_path));
    ClassifyServer server(model);
    const int port = server.bind(config.host, config.port);
    out << "serving on http://" << config.host << ":" << port
        << " (POST /classify, GET /health)" << std::endl;
    active_server = &server;
    std::signal(SIGINT, stop_active_server);
    std::signal(SIGTERM, stop_active_server);
    server.serve();
    active_server = nullptr;
    return 0;
  });
}

int cmd_report(const std::string& matrix_path, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_path(matrix_path, "--matrix");
    if (!std::filesystem::exists(matrix_path)) {
      throw Error(ErrorKind::NotFound, "input not found: " + matrix_path);
    }
    std::ifstream in(matrix_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const EvalReport rep = report(parse_confusion(buf.str()));
    out << (json ? render_json(rep) : render_text(rep));
    return 0;
  });
}

}  // namespace senti
