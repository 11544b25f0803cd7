#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorrest/bundle.hpp"
#include "tensorrest/law_report.hpp"

namespace tensorrest {

struct ReportViolation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string lhs;  // empty when the law is not an equation
  std::string rhs;

  friend auto operator<=>(const ReportViolation&, const ReportViolation&) = default;
  friend bool operator==(const ReportViolation&, const ReportViolation&) = default;
};

/// Outcome of one `check` run with morphisms given by name.
struct ReportDocument {
  std::string suite;
  std::vector<std::string> ran;
  /// "<suite>: <reason>" for suites that `all` could not run.
  std::vector<std::string> skipped;
  /// Sorted; the document passes iff this is empty.
  std::vector<ReportViolation> violations;
  std::optional<double> seconds;

  bool passed() const { return violations.empty(); }

  /// `key value` lines, one `violation` line per entry.
  std::string to_text() const;
  std::string to_json() const;
};

inline constexpr std::string_view kSuites[] = {"category", "R", "CR", "RR", "BR", "monoidal", "firm", "monrest", "TR"};

/// Runs one suite, or every applicable one for "all". Throws
/// Error(InvalidArgument) for an unknown suite or one whose structure the
/// bundle lacks (only "all" skips instead). `names` names morphisms by index.
ReportDocument run_suite(const Bundle& b, std::string_view suite, const std::vector<std::string>& names);

/// Appends a LawReport to `doc` with morphisms named by `names`.
void append_violations(ReportDocument& doc, const LawReport& report, const std::vector<std::string>& names);

}  // namespace tensorrest
