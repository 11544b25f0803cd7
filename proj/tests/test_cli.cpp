#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace tensorrest;
using namespace support;

namespace {

constexpr const char* kTerminal =
    "object x\n"
    "morphism idx : x -> x\n"
    "compose idx idx = idx\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("document parsed: " << text);
  throw;
}

std::vector<std::string> body_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#' && line.rfind("format", 0) != 0 && line.rfind("structure", 0) != 0)
      out.push_back(line);
  return out;
}

std::vector<Named> generator_outputs() {
  std::vector<Named> out = bundled_bases();
  out.push_back({"finpar1", finpar(1)});
  out.push_back({"finpar2", finpar(2)});
  out.push_back({"finset3", finset_monoidal(3)});
  out.push_back({"z5", cyclic_group_category(5)});
  for (const auto& [name, l] : oracle_semilattices()) out.push_back({"depressing-" + name, depressing_downsets(l)});
  out.push_back({"S[chain3]", s_of(from_semilattice(chain_semilattice(3))).carrier()});
  return out;
}

}  // namespace

TEST_CASE("terminal category document") {
  CategoryDocument doc = parse(kTerminal);
  CHECK(doc.objects == std::vector<std::string>{"x"});
  Bundle b = to_bundle(doc);
  CHECK(b.category.morphism_count() == 1);
  CHECK(check_category_laws(b.category).ok());
  CHECK(body_lines(serialize(doc)).size() == 3);
}

TEST_CASE("missing compose line names the pair") {
  std::string text =
      "object a\nobject b\n"
      "morphism ia : a -> a\nmorphism ib : b -> b\nmorphism f : a -> b\n"
      "compose ia ia = ia\ncompose ib ib = ib\ncompose f ia = f\n";
  ParseError e = parse_error(text);
  CHECK(e.parse_kind() == ParseErrorKind::IncompleteComposition);
  CHECK(e.detail().find("compose ib f") != std::string::npos);
  CHECK(e.line() == 9);
}

TEST_CASE("parse errors carry line and column") {
  ParseError dangling = parse_error("object x\nmorphism f : x -> y\n");
  CHECK(dangling.parse_kind() == ParseErrorKind::DanglingReference);
  CHECK(dangling.line() == 2);
  CHECK(dangling.column() == 19);

  ParseError dup = parse_error("object x\nobject x\n");
  CHECK(dup.parse_kind() == ParseErrorKind::DuplicateDeclaration);
  CHECK(dup.line() == 2);
  CHECK(dup.column() == 8);

  ParseError syntax = parse_error("object x\nmorphism f x -> x\n");
  CHECK(syntax.parse_kind() == ParseErrorKind::Syntax);
  CHECK(syntax.column() == 12);

  ParseError unknown = parse_error("objekt x\n");
  CHECK(unknown.parse_kind() == ParseErrorKind::Syntax);
  CHECK(unknown.column() == 1);

  ParseError twice = parse_error(std::string(kTerminal) + "compose idx idx = idx\n");
  CHECK(twice.parse_kind() == ParseErrorKind::DuplicateDeclaration);
  CHECK(twice.line() == 4);

  // Sections must match the declared structure.
  ParseError undeclared = parse_error(std::string("structure restriction\n") + kTerminal + "unit x\n");
  CHECK(undeclared.parse_kind() == ParseErrorKind::Invalid);
  CHECK(undeclared.line() == 5);

  ParseError incomplete = parse_error(std::string("structure restriction\n") + kTerminal);
  CHECK(incomplete.parse_kind() == ParseErrorKind::IncompleteTable);

  // No endomorphism acts as the identity.
  ParseError no_identity = parse_error(
      "object x\nmorphism e : x -> x\nmorphism z : x -> x\n"
      "compose e e = z\ncompose e z = z\ncompose z e = z\ncompose z z = z\n");
  CHECK(no_identity.parse_kind() == ParseErrorKind::Invalid);
}

TEST_CASE("comments and blank lines are ignored") {
  CategoryDocument doc = parse(std::string("# header\n\nformat 1\n") + "object x   # the only object\n" +
                               "morphism idx : x -> x\n\n" + "compose idx idx = idx # unit\n");
  CHECK(doc == parse(kTerminal));
}

TEST_CASE("property: parse and serialize round-trip every generator output") {
  for (const auto& [name, b] : generator_outputs()) {
    CategoryDocument doc = to_document(b);
    std::string text = serialize(doc);
    CategoryDocument back = parse(text);
    CHECK_MESSAGE(back == doc, name);
    CHECK_MESSAGE(serialize(back) == text, name);
    CHECK_MESSAGE(to_bundle(back) == b, name);
  }
}

TEST_CASE("user names sort into indices") {
  CategoryDocument doc = parse(
      "object y\nobject x\n"
      "morphism zf : x -> y\nmorphism ix : x -> x\nmorphism iy : y -> y\n"
      "compose iy zf = zf\ncompose zf ix = zf\ncompose ix ix = ix\ncompose iy iy = iy\n");
  CHECK(doc.objects == std::vector<std::string>{"x", "y"});
  CHECK(morphism_names(doc) == std::vector<std::string>{"ix", "iy", "zf"});
  Bundle b = to_bundle(doc);
  CHECK(b.category.identity(ObjId(0)) == MorId(0));
  CHECK(b.category.dom(MorId(2)) == ObjId(0));
  CHECK(parse(serialize(doc)) == doc);
}

TEST_CASE("golden files are stable") {
  const std::string dir = TENSORREST_GOLDEN_DIR;
  Bundle chain = from_semilattice(chain_semilattice(3));
  CHECK(serialize(to_document(chain)) == read_file(dir + "/chain3.cat"));
  CHECK(serialize(to_document(s_of(chain).carrier())) == read_file(dir + "/chain3_s.cat"));
  CHECK(to_bundle(parse(read_file(dir + "/chain3.cat"))) == chain);
}

TEST_CASE("reports") {
  Bundle par = finpar(2);
  CategoryDocument doc = to_document(par);
  ReportDocument tr = run_suite(par, "TR", morphism_names(doc));
  CHECK_FALSE(tr.passed());
  CHECK(std::is_sorted(tr.violations.begin(), tr.violations.end()));
  bool named = false;
  for (const auto& v : tr.violations)
    if (v.axiom == "TR3" && v.witness == std::vector<std::string>{"m16"}) named = true;
  CHECK(named);
  CHECK(tr.to_text() == run_suite(par, "TR", morphism_names(doc)).to_text());
  CHECK(tr.to_text().find("status fail\n") != std::string::npos);
  CHECK(tr.to_json().find("\"TR3\"") != std::string::npos);

  ReportDocument all = run_suite(from_semilattice(chain_semilattice(3)), "all", {});
  CHECK(all.passed());
  CHECK(all.ran == std::vector<std::string>{"category", "monoidal", "firm"});
  CHECK_THROWS_AS(run_suite(from_semilattice(chain_semilattice(3)), "R", {}), Error);
  CHECK_THROWS_AS(run_suite(par, "nonsense", {}), Error);

  ReportDocument cr = run_suite(par, "CR", morphism_names(doc));
  CHECK(std::any_of(cr.violations.begin(), cr.violations.end(), [](const auto& v) { return v.axiom == "CR4"; }));
  CHECK(run_suite(par, "R", {}).passed());
  CHECK(run_suite(par, "RR", {}).passed());
  CHECK(run_suite(par, "BR", {}).passed());
  CHECK(run_suite(par, "monrest", {}).passed());
}
