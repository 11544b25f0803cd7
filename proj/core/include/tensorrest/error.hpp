#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tensorrest {

enum class ErrorKind {
  MalformedTables,
  SearchBudgetExceeded,
  SizeBudgetExceeded,
  NotFirm,
  NotStrict,
  NotBraided,
  NotASubunit,
  PrerequisiteFailed,
  InvariantViolation,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind identifies the contract
/// that was broken; the message names the offending data.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

enum class ParseErrorKind {
  Syntax,
  DanglingReference,
  DuplicateDeclaration,
  IncompleteComposition,
  IncompleteTable,
  Invalid,
};

const char* to_string(ParseErrorKind kind) noexcept;

/// First error found while reading a category document. Line and column are
/// 1-based; column points at the offending token.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

  ParseErrorKind parse_kind() const noexcept { return parse_kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind parse_kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace tensorrest
