#include "senti/model_io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "senti/error.hpp"

namespace senti {
namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorKind::FormatError, "model: " + what);
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    format_error(std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> fields(const char* context) {
    std::string line;
    if (!std::getline(in_, line)) format_error(std::string("truncated before ") + context);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string f; ss >> f;) out.push_back(std::move(f));
    return out;
  }

  // Expects "<key> <value...>" with exactly `count` values.
  std::vector<std::string> keyed(const char* key, std::size_t count) {
    auto f = fields(key);
    if (f.size() != count + 1 || f[0] != key) format_error(std::string("expected '") + key + "' line");
    f.erase(f.begin());
    return f;
  }

  std::istream& stream() { return in_; }

 private:
  std::istream& in_;
};

Polarity parse_label(const std::string& text) {
  auto p = parse_polarity(text);
  if (!p) format_error("unknown label '" + text + "'");
  return *p;
}

// Negative zeros are kept so decision values survive bit for bit.
bool stored(double v) { return v != 0.0 || std::signbit(v); }

}  // namespace

void write_model(const MulticlassModel& model, std::ostream& out) {
  out << "senti-model " << kModelFormatVersion << '\n';
  out << "lexicon " << model.lexicon.size() << '\n';
  write_lexicon(model.lexicon, out);
  out << "scheme " << to_string(model.options.scheme) << '\n';
  out << "clamp_idf " << (model.options.clamp_idf ? 1 : 0) << '\n';
  out << "fields " << (model.options.fields == TextFields::BodyOnly ? "body" : "title+body") << '\n';
  out << "pairs " << model.pairwise.size() << '\n';
  for (const auto& m : model.pairwise) {
    out << "pair " << to_string(m.pos_label) << ' ' << to_string(m.neg_label) << '\n';
    out << "b " << format_real(m.b) << '\n';
    out << "params C " << format_real(m.params.C) << " tol " << format_real(m.params.tol)
        << " max_passes " << m.params.max_passes << " max_iters "
        << m.params.resolved_max_iters(Eigen::Index(m.training_size)) << '\n';
    out << "training_size " << m.training_size << '\n';
    std::size_t nnz = 0;
    for (Eigen::Index i = 0; i < m.w.size(); ++i) nnz += stored(m.w[i]);
    out << "weights " << nnz << '\n';
    for (Eigen::Index i = 0; i < m.w.size(); ++i) {
      if (stored(m.w[i])) out << i << ' ' << format_real(m.w[i]) << '\n';
    }
    out << "end\n";
  }
}

MulticlassModel read_model(std::istream& in) {
  LineReader reader(in);
  auto head = reader.fields("header");
  if (head.size() != 2 || head[0] != "senti-model") format_error("missing 'senti-model' header");
  const int version = parse_number<int>(head[1], "version");
  if (version != kModelFormatVersion) {
    throw Error(ErrorKind::FormatVersionMismatch,
                "model version " + head[1] + " is not supported (expected " +
                    std::to_string(kModelFormatVersion) + ")");
  }

  MulticlassModel model;
  const auto term_count = parse_number<std::size_t>(reader.keyed("lexicon", 1)[0], "term count");
  model.lexicon = read_lexicon(reader.stream(), term_count);

  const auto scheme_text = reader.keyed("scheme", 1)[0];
  const auto scheme = parse_scheme(scheme_text);
  if (!scheme) format_error("unknown scheme '" + scheme_text + "'");
  model.options.scheme = *scheme;
  model.options.clamp_idf = parse_number<int>(reader.keyed("clamp_idf", 1)[0], "clamp_idf") != 0;
  const auto fields = reader.keyed("fields", 1)[0];
  if (fields == "body") {
    model.options.fields = TextFields::BodyOnly;
  } else if (fields == "title+body") {
    model.options.fields = TextFields::TitleAndBody;
  } else {
    format_error("unknown fields '" + fields + "'");
  }

  const auto pair_count = parse_number<std::size_t>(reader.keyed("pairs", 1)[0], "pair count");
  if (pair_count == 0 || pair_count > kNumPolarities) format_error("bad pair count");
  const auto width = static_cast<Eigen::Index>(model.lexicon.size());
  for (std::size_t k = 0; k < pair_count; ++k) {
    BinarySvmModel m;
    const auto labels = reader.keyed("pair", 2);
    m.pos_label = parse_label(labels[0]);
    m.neg_label = parse_label(labels[1]);
    m.b = parse_number<double>(reader.keyed("b", 1)[0], "bias");
    const auto p = reader.keyed("params", 8);
    if (p[0] != "C" || p[2] != "tol" || p[4] != "max_passes" || p[6] != "max_iters") {
      format_error("bad params line");
    }
    m.params.C = parse_number<double>(p[1], "C");
    m.params.tol = parse_number<double>(p[3], "tol");
    m.params.max_passes = parse_number<std::int64_t>(p[5], "max_passes");
    m.params.max_iters = parse_number<std::int64_t>(p[7], "max_iters");
    m.training_size = parse_number<std::size_t>(reader.keyed("training_size", 1)[0], "training_size");
    const auto nnz = parse_number<std::size_t>(reader.keyed("weights", 1)[0], "weight count");
    m.w = Eigen::VectorXd::Zero(width);
    for (std::size_t e = 0; e < nnz; ++e) {
      const auto f = reader.fields("weight entry");
      if (f.size() != 2) format_error("bad weight entry");
      const auto index = parse_number<Eigen::Index>(f[0], "weight index");
      if (index < 0 || index >= width) format_error("weight index out of range");
      m.w[index] = parse_number<double>(f[1], "weight");
    }
    if (reader.fields("end") != std::vector<std::string>{"end"}) format_error("missing 'end'");
    const double norm = m.w.norm();
    m.stats.margin = norm > 0 ? 2.0 / norm : std::numeric_limits<double>::infinity();
    model.pairwise.push_back(std::move(m));
  }
  return model;
}

void save_model(const MulticlassModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  write_model(model, out);
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

MulticlassModel load_model(const std::string& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorKind::NotFound, "input not found: " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_model(in);
}

}  // namespace senti
