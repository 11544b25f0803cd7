#include "tensorrest/error.hpp"

namespace tensorrest {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedTables: return "MalformedTables";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::NotFirm: return "NotFirm";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::NotBraided: return "NotBraided";
    case ErrorKind::NotASubunit: return "NotASubunit";
    case ErrorKind::PrerequisiteFailed: return "PrerequisiteFailed";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::DanglingReference: return "DanglingReference";
    case ParseErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ParseErrorKind::IncompleteComposition: return "IncompleteComposition";
    case ParseErrorKind::IncompleteTable: return "IncompleteTable";
    case ParseErrorKind::Invalid: return "Invalid";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

static std::string format_parse(ParseErrorKind kind, std::size_t line, std::size_t column,
                                const std::string& message) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + to_string(kind) + ": " + message;
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::Parse, format_parse(kind, line, column, message)),
      parse_kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace tensorrest
