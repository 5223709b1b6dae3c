#include "senti/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "senti/error.hpp"

namespace senti {
namespace {

using Row = std::vector<std::string>;

// Reads one logical CSV record. Returns false at end of input. Quoted fields
// may span lines; a doubled quote inside a quoted field is a literal quote.
bool read_csv_row(std::istream& in, Row& row, bool& unterminated) {
  row.clear();
  unterminated = false;
  if (in.peek() == std::char_traits<char>::eof()) return false;

  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_was_quoted) {
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get(c);
      break;
    } else if (c == '\n') {
      break;
    } else {
      field.push_back(c);
    }
  }
  unterminated = in_quotes;
  row.push_back(std::move(field));
  return true;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void row_error(ErrorKind kind, std::size_t row, const std::string& reason) {
  throw Error(kind, "row " + std::to_string(row) + ": " + reason);
}

std::optional<Polarity> parse_label_cell(const std::string& cell, std::size_t row) {
  const std::string text = trim(cell);
  if (text.empty()) return std::nullopt;
  auto p = parse_polarity(text);
  if (!p) row_error(ErrorKind::UnknownLabel, row, "unknown label '" + text + "'");
  return p;
}

bool needs_quoting(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos;
}

void write_field(std::ostream& out, std::string_view s) {
  if (!needs_quoting(s)) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  // Uniform on [0, bound) without modulo bias.
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v > limit);
  return v % bound;
}

}  // namespace

Corpus parse_corpus(std::istream& in, bool require_labels, std::string source) {
  Corpus corpus;
  corpus.provenance = {std::move(source), std::chrono::system_clock::now()};

  Row row;
  bool unterminated = false;
  if (!read_csv_row(in, row, unterminated)) {
    throw Error(ErrorKind::MalformedRow, "row 0: missing header");
  }
  if (!row.empty() && row[0].starts_with("\xEF\xBB\xBF")) row[0].erase(0, 3);
  std::string header;
  for (std::size_t i = 0; i < row.size(); ++i) header += (i ? "," : "") + trim(row[i]);
  if (header != kCorpusHeader) {
    throw Error(ErrorKind::MalformedRow,
                "row 0: expected header '" + std::string(kCorpusHeader) + "', got '" + header + "'");
  }

  std::set<std::uint64_t> seen;
  std::size_t row_no = 0;
  while (read_csv_row(in, row, unterminated)) {
    ++row_no;
    if (unterminated) row_error(ErrorKind::MalformedRow, row_no, "unterminated quoted field");
    if (row.size() == 1 && trim(row[0]).empty()) {
      --row_no;  // blank line
      continue;
    }
    if (row.size() != 6) {
      row_error(ErrorKind::MalformedRow, row_no,
                "expected 6 columns, got " + std::to_string(row.size()));
    }

    ReviewRecord rec;
    const std::string id_text = trim(row[0]);
    auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), rec.id);
    if (ec != std::errc() || ptr != id_text.data() + id_text.size() || rec.id == 0) {
      row_error(ErrorKind::MalformedRow, row_no, "id must be a positive integer");
    }
    rec.category = row[1];
    rec.title = row[2];
    rec.body = row[3];
    if (trim(rec.body).empty()) row_error(ErrorKind::MalformedRow, row_no, "empty body");
    rec.human_label = parse_label_cell(row[4], row_no);
    rec.machine_label = parse_label_cell(row[5], row_no);
    if (require_labels && !rec.human_label) {
      row_error(ErrorKind::MissingLabel, row_no, "missing human label");
    }
    if (!seen.insert(rec.id).second) {
      throw Error(ErrorKind::DuplicateId, "duplicate id " + std::to_string(rec.id));
    }
    corpus.records.push_back(std::move(rec));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path, bool require_labels) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::NotFound, "input not found: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return parse_corpus(in, require_labels, path);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  out << kCorpusHeader << '\n';
  for (const auto& r : corpus.records) {
    out << r.id << ',';
    write_field(out, r.category);
    out << ',';
    write_field(out, r.title);
    out << ',';
    write_field(out, r.body);
    out << ',' << (r.human_label ? to_string(*r.human_label) : "") << ','
        << (r.machine_label ? to_string(*r.machine_label) : "") << '\n';
  }
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  write_corpus(corpus, out);
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, std::size_t train_count,
                                       std::uint64_t seed) {
  const std::size_t n = corpus.size();
  if (train_count == 0 || train_count >= n) {
    throw Error(ErrorKind::BadSplit, "train_count must be in (0, " + std::to_string(n) +
                                         "), got " + std::to_string(train_count));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[bounded_draw(rng, i + 1)]);
  }
  std::vector<bool> in_train(n, false);
  for (std::size_t k = 0; k < train_count; ++k) in_train[order[k]] = true;

  Corpus train, test;
  train.provenance = test.provenance = corpus.provenance;
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? train : test).records.push_back(corpus.records[i]);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace senti
