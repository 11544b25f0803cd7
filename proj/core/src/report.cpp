#include "tensorrest/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "tensorrest/error.hpp"
#include "tensorrest/sconstr.hpp"

namespace tensorrest {

namespace {

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

bool needs_restriction(std::string_view s) { return s == "R" || s == "RR" || s == "BR" || s == "monrest" || s == "TR"; }
bool needs_corestriction(std::string_view s) { return s == "CR" || s == "RR" || s == "BR"; }
bool needs_monoidal(std::string_view s) { return s == "monoidal" || s == "firm" || s == "monrest" || s == "TR"; }

std::optional<std::string> missing_structure(const Bundle& b, std::string_view s) {
  if (needs_monoidal(s) && !b.monoidal) return "no monoidal section";
  if ((s == "firm" || s == "TR") && !b.monoidal->braided()) return "no braiding";
  if (needs_restriction(s) && !b.restriction) return "no restriction section";
  if (needs_corestriction(s) && !b.corestriction) return "no corestriction section";
  return std::nullopt;
}

LawReport run_one(const Bundle& b, std::string_view s) {
  const FinCategory& c = b.category;
  LawReport out;
  if (s == "category") return check_category_laws(c);
  // Everything else reads the tables as a category first.
  if (!check_category_laws(c).ok()) {
    out.add("prerequisite:category", {});
    return out;
  }
  if (s == "R") return check_R_axioms(c, *b.restriction);
  if (s == "CR") return check_CR_axioms(c, *b.corestriction);
  if (s == "RR") return check_RR_axioms(c, *b.restriction, *b.corestriction);
  if (s == "BR") return check_BR_axioms(c, *b.restriction, *b.corestriction);
  if (s == "monoidal") return check_monoidal_laws(c, *b.monoidal);
  if (!check_monoidal_laws(c, *b.monoidal).ok()) {
    out.add("prerequisite:monoidal", {});
    return out;
  }
  if (s == "firm") {
    if (!TensorTopology(c, *b.monoidal).firm()) out.add("firm", {});
    return out;
  }
  if (s == "monrest") return check_monoidal_restriction(c, *b.monoidal, *b.restriction);
  if (s == "TR") {
    try {
      return check_TR_axioms(c, *b.monoidal, *b.restriction).violations;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrerequisiteFailed) throw;
      out.add("prerequisite:" + e.detail(), {});
      return out;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(s) + "'");
}

}  // namespace

void append_violations(ReportDocument& doc, const LawReport& report, const std::vector<std::string>& names) {
  auto name = [&](MorId f) { return f.index < names.size() ? names[f.index] : "#" + std::to_string(f.index); };
  for (const Violation& v : report.violations()) {
    ReportViolation rv{v.axiom, {}, v.lhs ? name(*v.lhs) : "", v.rhs ? name(*v.rhs) : ""};
    for (MorId w : v.witness) rv.witness.push_back(name(w));
    doc.violations.push_back(std::move(rv));
  }
  std::sort(doc.violations.begin(), doc.violations.end());
  doc.violations.erase(std::unique(doc.violations.begin(), doc.violations.end()), doc.violations.end());
}

ReportDocument run_suite(const Bundle& b, std::string_view suite, const std::vector<std::string>& names) {
  ReportDocument doc;
  doc.suite = std::string(suite);
  if (suite == "all") {
    for (std::string_view s : kSuites) {
      if (auto why = missing_structure(b, s)) {
        doc.skipped.push_back(std::string(s) + ": " + *why);
        continue;
      }
      doc.ran.emplace_back(s);
      append_violations(doc, run_one(b, s), names);
    }
    return doc;
  }
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites))
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  if (auto why = missing_structure(b, suite))
    throw Error(ErrorKind::InvalidArgument, "suite " + std::string(suite) + " needs structure the file lacks: " + *why);
  doc.ran.emplace_back(suite);
  append_violations(doc, run_one(b, suite), names);
  return doc;
}

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n"
      << "status " << (passed() ? "pass" : "fail") << "\n"
      << "ran " << join(ran, ' ') << "\n";
  for (const auto& s : skipped) out << "skipped " << s << "\n";
  out << "violations " << violations.size() << "\n";
  for (const auto& v : violations) {
    out << "violation " << v.axiom << " witness " << (v.witness.empty() ? "-" : join(v.witness, ','));
    if (!v.lhs.empty() || !v.rhs.empty()) out << " lhs " << (v.lhs.empty() ? "-" : v.lhs) << " rhs " << (v.rhs.empty() ? "-" : v.rhs);
    out << "\n";
  }
  if (seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *seconds);
    out << "time " << buf << "\n";
  }
  return out.str();
}

std::string ReportDocument::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["status"] = passed() ? "pass" : "fail";
  j["ran"] = ran;
  j["skipped"] = skipped;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json e;
    e["axiom"] = v.axiom;
    e["witness"] = v.witness;
    e["lhs"] = v.lhs.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v.lhs);
    e["rhs"] = v.rhs.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v.rhs);
    j["violations"].push_back(std::move(e));
  }
  if (seconds) j["time"] = *seconds;
  return j.dump(2) + "\n";
}

}  // namespace tensorrest
