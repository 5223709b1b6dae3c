#pragma once

#include <stdexcept>
#include <string>

namespace senti {

enum class ErrorKind {
  NotFound,
  Io,
  MalformedRow,
  MissingLabel,
  UnknownLabel,
  DuplicateId,
  BadSplit,
  UnlabeledRecord,
  EmptyLexicon,
  FormatVersionMismatch,
  FormatError,
  UnknownTerm,
  DimensionMismatch,
  SingleClassData,
  MissingClass,
  InvalidParams,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// 2 for missing inputs, 1 for I/O trouble, 3 for everything that is a
// validation failure of the data or parameters.
int exit_code_for(ErrorKind kind);

}  // namespace senti
