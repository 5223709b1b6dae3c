#include "senti/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "senti/error.hpp"

namespace senti {
namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorKind::FormatError, "lexicon: " + what);
}

std::uint64_t parse_count(std::string_view text, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) format_error("bad " + what);
  return v;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

TokenSequence record_tokens(const ReviewRecord& record, TextFields fields) {
  if (fields == TextFields::BodyOnly) return tokenize(record.body);
  TokenSequence tokens = tokenize(record.title);
  TokenSequence body = tokenize(record.body);
  tokens.insert(tokens.end(), std::make_move_iterator(body.begin()),
                std::make_move_iterator(body.end()));
  return tokens;
}

FeatureLexicon::FeatureLexicon(std::vector<std::string> terms,
                               std::vector<std::uint64_t> doc_freq,
                               std::uint64_t train_doc_count)
    : terms_(std::move(terms)), doc_freq_(std::move(doc_freq)), train_doc_count_(train_doc_count) {
  if (terms_.empty()) throw Error(ErrorKind::EmptyLexicon, "empty lexicon");
  if (train_doc_count_ == 0) {
    throw Error(ErrorKind::FormatError, "lexicon: training document count must be positive");
  }
  if (terms_.size() != doc_freq_.size()) {
    throw Error(ErrorKind::FormatError, "lexicon: term/doc_freq length mismatch");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const auto tokens = tokenize(t);
    if (tokens.size() != 1 || tokens.front() != t) {
      throw Error(ErrorKind::FormatError, "lexicon: '" + t + "' is not a normalized token");
    }
    if (doc_freq_[i] > train_doc_count_) {
      throw Error(ErrorKind::FormatError, "lexicon: doc_freq of '" + t + "' exceeds D");
    }
    if (!index_.emplace(t, i).second) {
      throw Error(ErrorKind::FormatError, "lexicon: duplicate term '" + t + "'");
    }
  }
}

std::optional<std::size_t> FeatureLexicon::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FeatureLexicon::require_index(std::string_view term) const {
  if (auto i = index_of(term)) return *i;
  throw Error(ErrorKind::UnknownTerm, "term not in lexicon: " + std::string(term));
}

FeatureLexicon build_lexicon(const Corpus& train, const LexiconParams& params) {
  if (train.empty()) throw Error(ErrorKind::InvalidParams, "training corpus is empty");
  for (const auto& r : train.records) {
    if (!r.human_label) {
      throw Error(ErrorKind::UnlabeledRecord, "record " + std::to_string(r.id) + " has no label");
    }
  }

  std::map<std::string, std::uint64_t> df;
  for (const auto& r : train.records) {
    const auto tokens = record_tokens(r, params.fields);
    for (const auto& t : std::set<std::string>(tokens.begin(), tokens.end())) ++df[t];
  }

  using Entry = std::pair<std::string, std::uint64_t>;
  const auto by_rank = [](const Entry& a, const Entry& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };

  std::vector<Entry> chosen;
  for (const auto& [term, count] : df) {
    if (count >= params.min_doc_freq) chosen.emplace_back(term, count);
  }
  std::sort(chosen.begin(), chosen.end(), by_rank);
  if (params.top_k && chosen.size() > *params.top_k) chosen.resize(*params.top_k);

  std::set<std::string> present;
  for (const auto& e : chosen) present.insert(e.first);
  for (const auto& raw : params.seed_terms) {
    const auto tokens = tokenize(raw);
    if (tokens.size() != 1) {
      throw Error(ErrorKind::InvalidParams, "seed term '" + raw + "' is not a single token");
    }
    const auto& term = tokens.front();
    if (present.insert(term).second) {
      auto it = df.find(term);
      chosen.emplace_back(term, it == df.end() ? 0 : it->second);
    }
  }
  if (chosen.empty()) throw Error(ErrorKind::EmptyLexicon, "empty lexicon");
  std::sort(chosen.begin(), chosen.end(), by_rank);

  std::vector<std::string> terms;
  std::vector<std::uint64_t> counts;
  for (auto& [term, count] : chosen) {
    terms.push_back(std::move(term));
    counts.push_back(count);
  }
  return FeatureLexicon(std::move(terms), std::move(counts), train.size());
}

void write_lexicon(const FeatureLexicon& lex, std::ostream& out) {
  out << "version " << lex.schema_version() << '\n';
  out << "D " << lex.train_doc_count() << '\n';
  for (std::size_t i = 0; i < lex.size(); ++i) {
    out << lex.terms()[i] << ' ' << lex.doc_freq()[i] << '\n';
  }
}

FeatureLexicon read_lexicon(std::istream& in, std::optional<std::size_t> term_count) {
  std::string line;
  if (!std::getline(in, line)) format_error("missing version line");
  line = strip_cr(line);
  if (!line.starts_with("version ")) format_error("missing version line");
  const auto version = parse_count(std::string_view(line).substr(8), "version");
  if (version != static_cast<std::uint64_t>(kLexiconSchemaVersion)) {
    throw Error(ErrorKind::FormatVersionMismatch,
                "lexicon version " + std::to_string(version) + " is not supported (expected " +
                    std::to_string(kLexiconSchemaVersion) + ")");
  }
  if (!std::getline(in, line)) format_error("missing D line");
  line = strip_cr(line);
  if (!line.starts_with("D ")) format_error("missing D line");
  const auto docs = parse_count(std::string_view(line).substr(2), "document count");

  std::vector<std::string> terms;
  std::vector<std::uint64_t> counts;
  while ((!term_count || terms.size() < *term_count) && std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty() && !term_count) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
      format_error("bad term line '" + line + "'");
    }
    terms.push_back(line.substr(0, space));
    counts.push_back(parse_count(std::string_view(line).substr(space + 1), "doc_freq"));
  }
  if (term_count && terms.size() != *term_count) format_error("truncated term list");
  return FeatureLexicon(std::move(terms), std::move(counts), docs);
}

void save_lexicon(const FeatureLexicon& lex, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  write_lexicon(lex, out);
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

FeatureLexicon load_lexicon(const std::string& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorKind::NotFound, "input not found: " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_lexicon(in);
}

std::vector<std::string> load_term_list(const std::string& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorKind::NotFound, "input not found: " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    terms.push_back(line.substr(first, last - first + 1));
  }
  return terms;
}

}  // namespace senti
