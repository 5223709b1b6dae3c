#include "senti/polarity.hpp"

#include <algorithm>
#include <cctype>

#include "senti/error.hpp"

namespace senti {

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: return "neutral";
  }
  return "unknown";
}

std::optional<Polarity> parse_polarity(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Polarity p : kAllPolarities) {
    if (lowered == to_string(p)) return p;
  }
  return std::nullopt;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Io: return "Io";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::UnlabeledRecord: return "UnlabeledRecord";
    case ErrorKind::EmptyLexicon: return "EmptyLexicon";
    case ErrorKind::FormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::UnknownTerm: return "UnknownTerm";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingleClassData: return "SingleClassData";
    case ErrorKind::MissingClass: return "MissingClass";
    case ErrorKind::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFound: return 2;
    case ErrorKind::Io: return 1;
    default: return 3;
  }
}

}  // namespace senti
