#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "senti/polarity.hpp"

namespace senti {

struct ReviewRecord {
  std::uint64_t id = 0;
  std::string category;
  std::string title;
  std::string body;
  std::optional<Polarity> human_label;
  std::optional<Polarity> machine_label;

  bool operator==(const ReviewRecord&) const = default;
};

struct Provenance {
  std::string source_path;
  std::chrono::system_clock::time_point loaded_at{};
};

// Records keep their source order; ids are unique. Provenance is metadata
// only and does not take part in equality.
struct Corpus {
  std::vector<ReviewRecord> records;
  Provenance provenance;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  friend bool operator==(const Corpus& a, const Corpus& b) { return a.records == b.records; }
};

inline constexpr const char* kCorpusHeader = "id,category,title,body,human_label,machine_label";

/// Parses the six-column CSV layout (RFC-4180 quoting, header row required).
/// Rows are numbered from 1 starting at the first data row in error messages.
Corpus parse_corpus(std::istream& in, bool require_labels, std::string source = "<stream>");
Corpus load_corpus(const std::string& path, bool require_labels);

void write_corpus(const Corpus& corpus, std::ostream& out);
void save_corpus(const Corpus& corpus, const std::string& path);

/// Random partition into (train, rest). Uses a Fisher-Yates shuffle driven by
/// std::mt19937_64 with rejection-sampled bounded draws, so the result is the
/// same on every platform for a given seed. Both halves keep source order.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, std::size_t train_count,
                                       std::uint64_t seed);

}  // namespace senti
