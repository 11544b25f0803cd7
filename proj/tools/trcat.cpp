// trcat: command-line front end for tensorrest. Exit codes: 0 when every
// check passes or the search finds something, 1 for violations or NONE, 2
// for unusable input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tensorrest/tensorrest.hpp"

namespace tr = tensorrest;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Loaded {
  tr::CategoryDocument doc;
  tr::Bundle bundle;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tr::Error(tr::ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    Loaded l{tr::parse(text.str()), {}};
    l.bundle = tr::to_bundle(l.doc);
    return l;
  } catch (const tr::ParseError& e) {
    throw tr::Error(tr::ErrorKind::Parse, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                              tr::to_string(e.parse_kind()) + ": " + e.detail());
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw tr::Error(tr::ErrorKind::InvalidArgument, "cannot write '" + out_path + "'");
  out << text;
}

tr::StructureFlags parse_preserve(const std::string& list) {
  tr::StructureFlags f;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "monoidal") f.monoidal = true;
    else if (item == "restriction") f.restriction = true;
    else if (item == "corestriction") f.corestriction = true;
    else if (!item.empty()) throw tr::Error(tr::ErrorKind::InvalidArgument, "unknown structure '" + item + "'");
  }
  return f;
}

std::size_t parse_count(const std::string& param, const char* what) {
  if (param.empty() || param.find_first_not_of("0123456789") != std::string::npos)
    throw tr::Error(tr::ErrorKind::InvalidArgument, std::string(what) + " needs a numeric --param");
  return std::stoul(param);
}

tr::Bundle run_example(const std::string& name, const std::string& param) {
  if (name == "semilattice") return tr::from_semilattice(tr::semilattice_by_name(param.empty() ? "chain3" : param));
  if (name == "depressing") return tr::depressing_downsets(tr::semilattice_by_name(param.empty() ? "chain3" : param));
  if (name == "trivial-restriction") {
    tr::Bundle b = tr::from_semilattice(tr::semilattice_by_name(param.empty() ? "chain3" : param));
    b.restriction = tr::trivial_restriction(b.category);
    return b;
  }
  if (name == "finpar") return tr::finpar(parse_count(param, "finpar"));
  if (name == "finset") return tr::finset_monoidal(parse_count(param, "finset"));
  if (name == "cyclic") return tr::cyclic_group_category(parse_count(param, "cyclic"));
  throw tr::Error(tr::ErrorKind::InvalidArgument,
                  "unknown example '" + name + "' (semilattice, depressing, trivial-restriction, finpar, finset, cyclic)");
}

int cmd_check(const std::string& file, const std::string& suite, bool json, bool timing, const std::string& out) {
  Loaded l = load(file);
  auto start = std::chrono::steady_clock::now();
  tr::ReportDocument report = tr::run_suite(l.bundle, suite, tr::morphism_names(l.doc));
  if (timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(out, json ? report.to_json() : report.to_text());
  return report.passed() ? kPass : kFail;
}

int cmd_subunits(const std::string& file) {
  Loaded l = load(file);
  if (!l.bundle.monoidal) throw tr::Error(tr::ErrorKind::InvalidArgument, "subunits need a monoidal section");
  const auto names = tr::morphism_names(l.doc);
  const auto& objects = l.doc.objects;
  tr::TensorTopology topo(l.bundle.category, *l.bundle.monoidal);
  std::cout << "subunits " << topo.size() << "\n";
  for (std::size_t i = 0; i < topo.size(); ++i)
    std::cout << "subunit " << i << " mono " << names[topo[i].mono.index] << " domain " << objects[topo[i].domain.index]
              << (i == topo.top() ? " top" : "") << "\n";
  std::cout << "firm " << (topo.firm() ? "yes" : "no") << "\n";
  if (!topo.firm()) return kFail;
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (std::size_t j = 0; j < topo.size(); ++j) std::cout << "meet " << i << " " << j << " = " << topo.meet(i, j) << "\n";
  return kPass;
}

int cmd_sconstruct(const std::string& file, const std::string& out) {
  Loaded l = load(file);
  if (!l.bundle.monoidal) throw tr::Error(tr::ErrorKind::InvalidArgument, "the S-construction needs a monoidal section");
  tr::SCategory s = tr::build_s_construction(l.bundle.category, *l.bundle.monoidal);
  emit(out, tr::serialize(tr::to_document(s.carrier())));
  return kPass;
}

int cmd_total(const std::string& file, const std::string& out) {
  Loaded l = load(file);
  if (!l.bundle.restriction) throw tr::Error(tr::ErrorKind::InvalidArgument, "T[X] needs a restriction section");
  const tr::MonoidalData* m = l.bundle.monoidal ? &*l.bundle.monoidal : nullptr;
  tr::TotalSubcategory t = tr::total_subcategory(l.bundle.category, *l.bundle.restriction, m);
  tr::Bundle b{t.category, t.monoidal, std::nullopt, std::nullopt};
  emit(out, tr::serialize(tr::to_document(b)));
  return kPass;
}

int cmd_iso(const std::string& a, const std::string& b, const std::string& preserve, std::uint64_t node_limit) {
  Loaded la = load(a);
  Loaded lb = load(b);
  tr::StructureFlags flags = parse_preserve(preserve);
  auto need = [&](bool flag, bool have_a, bool have_b, const char* what) {
    if (flag && !(have_a && have_b))
      throw tr::Error(tr::ErrorKind::InvalidArgument, std::string("--preserve ") + what + " needs that section in both files");
  };
  need(flags.monoidal, la.bundle.monoidal.has_value(), lb.bundle.monoidal.has_value(), "monoidal");
  need(flags.restriction, la.bundle.restriction.has_value(), lb.bundle.restriction.has_value(), "restriction");
  need(flags.corestriction, la.bundle.corestriction.has_value(), lb.bundle.corestriction.has_value(), "corestriction");
  auto found = tr::find_isomorphism(la.bundle, lb.bundle, flags, tr::SearchOptions{node_limit});
  if (!found) {
    std::cout << "NONE\n";
    return kFail;
  }
  const auto& f = found->first;
  const auto names_a = tr::morphism_names(la.doc);
  const auto names_b = tr::morphism_names(lb.doc);
  std::cout << "FOUND\n";
  for (std::size_t i = 0; i < f.obj_map.size(); ++i)
    std::cout << "object " << la.doc.objects[i] << " -> " << lb.doc.objects[f.obj_map[i].index] << "\n";
  for (std::size_t i = 0; i < f.mor_map.size(); ++i)
    std::cout << "morphism " << names_a[i] << " -> " << names_b[f.mor_map[i].index] << "\n";
  return kPass;
}

int cmd_roundtrip(const std::string& file, const std::string& direction, bool json, const std::string& out) {
  Loaded l = load(file);
  const tr::Bundle& b = l.bundle;
  if (!b.monoidal) throw tr::Error(tr::ErrorKind::InvalidArgument, "round trips need a monoidal section");
  if (direction == "ST" && !b.restriction) throw tr::Error(tr::ErrorKind::InvalidArgument, "ST needs a restriction section");
  tr::ReportDocument report;
  report.suite = "roundtrip-" + direction;
  try {
    tr::IsoCertificate cert = direction == "TS" ? tr::roundtrip_TS(b.category, *b.monoidal)
                                                : tr::roundtrip_ST(b.category, *b.monoidal, *b.restriction);
    report.ran = cert.verified;
    tr::append_violations(report, cert.violations, tr::morphism_names(l.doc));
  } catch (const tr::Error& e) {
    if (e.kind() != tr::ErrorKind::PrerequisiteFailed && e.kind() != tr::ErrorKind::NotFirm &&
        e.kind() != tr::ErrorKind::NotBraided && e.kind() != tr::ErrorKind::NotStrict)
      throw;
    report.violations.push_back({"prerequisite:" + e.detail(), {}, "", ""});
  }
  emit(out, json ? report.to_json() : report.to_text());
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monoidal and restriction categories: law suites, S-construction, T[X], isomorphism search."};
  app.require_subcommand(1);

  std::string file, file_b, out, suite = "all", preserve, name, param, direction;
  bool json = false, timing = false;
  std::uint64_t node_limit = tr::SearchOptions{}.node_limit;

  auto* check = app.add_subcommand("check", "Run law suites and print a report");
  check->add_option("file", file, "Category file")->required();
  check->add_option("--suite", suite, "category|monoidal|firm|R|CR|RR|BR|monrest|TR|all")
      ->check(CLI::IsMember({"category", "monoidal", "firm", "R", "CR", "RR", "BR", "monrest", "TR", "all"}));
  check->add_flag("--json", json, "Print the report as JSON");
  check->add_flag("--timing", timing, "Include wall-clock time in the report");
  check->add_option("-o,--output", out, "Write the report here instead of stdout");

  auto* subunits = app.add_subcommand("subunits", "List canonical subunits and the ISub meet table");
  subunits->add_option("file", file, "Category file")->required();

  auto* scons = app.add_subcommand("sconstruct", "Write the S-construction of a firm strict braided category");
  scons->add_option("file", file, "Category file")->required();
  scons->add_option("-o,--output", out, "Output file (stdout if omitted)");

  auto* total = app.add_subcommand("total", "Write T[X], the restriction-total maps");
  total->add_option("file", file, "Category file")->required();
  total->add_option("-o,--output", out, "Output file (stdout if omitted)");

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two files");
  iso->add_option("file_a", file, "First category file")->required();
  iso->add_option("file_b", file_b, "Second category file")->required();
  iso->add_option("--preserve", preserve, "Comma-separated: monoidal,restriction,corestriction");
  iso->add_option("--node-limit", node_limit, "Search budget in branching decisions");

  auto* example = app.add_subcommand("example", "Write a generated category");
  example->add_option("name", name, "semilattice|depressing|trivial-restriction|finpar|finset|cyclic")->required();
  example->add_option("--param", param, "Semilattice name (chain<n>, diamond, boolean<k>) or a size");
  example->add_option("-o,--output", out, "Output file (stdout if omitted)");

  auto* roundtrip = app.add_subcommand("roundtrip", "Certify C ≅ T[S[C]] (TS) or X ≅ S[T[X]] (ST)");
  roundtrip->add_option("file", file, "Category file")->required();
  roundtrip->add_option("--direction", direction, "TS or ST")->required()->check(CLI::IsMember({"TS", "ST"}));
  roundtrip->add_flag("--json", json, "Print the certificate as JSON");
  roundtrip->add_option("-o,--output", out, "Write the certificate here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(file, suite, json, timing, out);
    if (*subunits) return cmd_subunits(file);
    if (*scons) return cmd_sconstruct(file, out);
    if (*total) return cmd_total(file, out);
    if (*iso) return cmd_iso(file, file_b, preserve, node_limit);
    if (*example) {
      emit(out, tr::serialize(tr::to_document(run_example(name, param))));
      return kPass;
    }
    if (*roundtrip) return cmd_roundtrip(file, direction, json, out);
  } catch (const std::exception& e) {
    std::cerr << "trcat: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
