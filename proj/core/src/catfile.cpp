#include "tensorrest/catfile.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tensorrest/error.hpp"

namespace tensorrest {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '\'';
  });
}

std::string padded(char prefix, std::size_t i, std::size_t count) {
  std::size_t width = std::to_string(count == 0 ? 0 : count - 1).size();
  std::string digits = std::to_string(i);
  return prefix + std::string(width - digits.size(), '0') + digits;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CategoryDocument run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      line_ = line_no;
      toks_ = tokenize(text_.substr(pos, end - pos));
      if (!toks_.empty()) statement();
      if (end == text_.size()) break;
      pos = end + 1;
    }
    // A trailing newline does not start another line.
    if (!text_.empty() && text_.back() == '\n') --line_no;
    line_ = line_no + 1;
    finish();
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, std::size_t tok, const std::string& msg) const {
    std::size_t col = tok < toks_.size() ? toks_[tok].column : (toks_.empty() ? 1 : toks_.back().column + toks_.back().text.size());
    throw ParseError(kind, line_, col, msg);
  }
  [[noreturn]] void fail_at_end(ParseErrorKind kind, const std::string& msg) const {
    throw ParseError(kind, line_, 1, msg);
  }

  // Checks the token shape against a pattern: "n" a name, anything else a literal.
  void expect(std::initializer_list<const char*> shape) {
    std::size_t i = 0;
    for (const char* want : shape) {
      if (i >= toks_.size()) fail(ParseErrorKind::Syntax, i, std::string("expected ") + (std::string(want) == "n" ? "a name" : "'" + std::string(want) + "'"));
      if (std::string(want) == "n") {
        if (!valid_name(toks_[i].text)) fail(ParseErrorKind::Syntax, i, "'" + toks_[i].text + "' is not a valid name");
      } else if (toks_[i].text != want) {
        fail(ParseErrorKind::Syntax, i, "expected '" + std::string(want) + "', found '" + toks_[i].text + "'");
      }
      ++i;
    }
    if (i < toks_.size()) fail(ParseErrorKind::Syntax, i, "unexpected '" + toks_[i].text + "'");
  }

  const std::string& obj(std::size_t tok) {
    const std::string& n = toks_[tok].text;
    if (!objects_.count(n)) fail(ParseErrorKind::DanglingReference, tok, "object '" + n + "' is not declared");
    return n;
  }
  const MorphismDecl& mor(std::size_t tok) {
    const std::string& n = toks_[tok].text;
    auto it = morphisms_.find(n);
    if (it == morphisms_.end()) fail(ParseErrorKind::DanglingReference, tok, "morphism '" + n + "' is not declared");
    return it->second;
  }

  void section(bool DocumentFlags::*flag, const char* name) {
    if (declared_structure_) {
      if (!(doc_.structure.*flag)) fail(ParseErrorKind::Invalid, 0, std::string("the header does not declare ") + name + " structure");
    } else {
      doc_.structure.*flag = true;
    }
    started_ = true;
  }

  template <class Map, class Key>
  void insert(Map& map, const Key& key, const std::string& value, const std::string& what) {
    if (!map.emplace(key, value).second) fail(ParseErrorKind::DuplicateDeclaration, 1, what + " is given twice");
  }

  void statement() {
    const std::string& kw = toks_[0].text;
    if (kw == "format") {
      expect({"format", "1"});
      if (started_ || format_seen_) fail(ParseErrorKind::Syntax, 0, "'format' must be the first statement");
      format_seen_ = true;
      return;
    }
    if (kw == "structure") {
      if (started_ || declared_structure_) fail(ParseErrorKind::Syntax, 0, "'structure' must precede every other statement");
      declared_structure_ = true;
      for (std::size_t i = 1; i < toks_.size(); ++i) {
        const std::string& f = toks_[i].text;
        bool* slot = f == "monoidal"        ? &doc_.structure.monoidal
                     : f == "braided"       ? &doc_.structure.braided
                     : f == "restriction"   ? &doc_.structure.restriction
                     : f == "corestriction" ? &doc_.structure.corestriction
                                            : nullptr;
        if (!slot) fail(ParseErrorKind::Syntax, i, "unknown structure flag '" + f + "'");
        if (*slot) fail(ParseErrorKind::DuplicateDeclaration, i, "structure flag '" + f + "' is given twice");
        *slot = true;
      }
      if (doc_.structure.braided && !doc_.structure.monoidal)
        fail(ParseErrorKind::Invalid, 0, "a braided structure must also be monoidal");
      return;
    }
    started_ = true;
    if (kw == "object") {
      expect({"object", "n"});
      if (!objects_.insert(toks_[1].text).second)
        fail(ParseErrorKind::DuplicateDeclaration, 1, "object '" + toks_[1].text + "' is declared twice");
      doc_.objects.push_back(toks_[1].text);
    } else if (kw == "morphism") {
      expect({"morphism", "n", ":", "n", "->", "n"});
      MorphismDecl d{toks_[1].text, obj(3), obj(5)};
      if (!morphisms_.emplace(d.name, d).second)
        fail(ParseErrorKind::DuplicateDeclaration, 1, "morphism '" + d.name + "' is declared twice");
      doc_.morphisms.push_back(d);
    } else if (kw == "compose") {
      expect({"compose", "n", "n", "=", "n"});
      const auto& g = mor(1);
      const auto& f = mor(2);
      mor(4);
      if (f.cod != g.dom) fail(ParseErrorKind::Invalid, 1, g.name + " ∘ " + f.name + " is not composable");
      insert(doc_.compose, CategoryDocument::Key2{g.name, f.name}, toks_[4].text, "compose " + g.name + " " + f.name);
    } else if (kw == "unit") {
      expect({"unit", "n"});
      section(&DocumentFlags::monoidal, "monoidal");
      obj(1);
      if (!doc_.unit.empty()) fail(ParseErrorKind::DuplicateDeclaration, 0, "the unit is given twice");
      doc_.unit = toks_[1].text;
    } else if (kw == "tensor_obj") {
      expect({"tensor_obj", "n", "n", "=", "n"});
      section(&DocumentFlags::monoidal, "monoidal");
      insert(doc_.tensor_obj, CategoryDocument::Key2{obj(1), obj(2)}, obj(4), "tensor_obj " + toks_[1].text + " " + toks_[2].text);
    } else if (kw == "tensor_mor") {
      expect({"tensor_mor", "n", "n", "=", "n"});
      section(&DocumentFlags::monoidal, "monoidal");
      insert(doc_.tensor_mor, CategoryDocument::Key2{mor(1).name, mor(2).name}, mor(4).name,
             "tensor_mor " + toks_[1].text + " " + toks_[2].text);
    } else if (kw == "lambda" || kw == "rho") {
      expect({kw.c_str(), "n", "=", "n"});
      section(&DocumentFlags::monoidal, "monoidal");
      insert(kw == "lambda" ? doc_.lambda : doc_.rho, obj(1), mor(3).name, kw + " " + toks_[1].text);
    } else if (kw == "alpha") {
      expect({"alpha", "n", "n", "n", "=", "n"});
      section(&DocumentFlags::monoidal, "monoidal");
      insert(doc_.alpha, CategoryDocument::Key3{obj(1), obj(2), obj(3)}, mor(5).name,
             "alpha " + toks_[1].text + " " + toks_[2].text + " " + toks_[3].text);
    } else if (kw == "sigma") {
      expect({"sigma", "n", "n", "=", "n"});
      section(&DocumentFlags::braided, "braided");
      if (!declared_structure_) doc_.structure.monoidal = true;
      insert(doc_.sigma, CategoryDocument::Key2{obj(1), obj(2)}, mor(4).name, "sigma " + toks_[1].text + " " + toks_[2].text);
    } else if (kw == "restrict" || kw == "corestrict") {
      expect({kw.c_str(), "n", "=", "n"});
      if (kw == "restrict") section(&DocumentFlags::restriction, "restriction");
      else section(&DocumentFlags::corestriction, "corestriction");
      insert(kw == "restrict" ? doc_.restrict : doc_.corestrict, mor(1).name, mor(3).name, kw + " " + toks_[1].text);
    } else {
      fail(ParseErrorKind::Syntax, 0, "unknown statement '" + kw + "'");
    }
  }

  void finish() {
    if (doc_.objects.empty()) fail_at_end(ParseErrorKind::Invalid, "the document declares no objects");
    std::sort(doc_.objects.begin(), doc_.objects.end());
    std::sort(doc_.morphisms.begin(), doc_.morphisms.end());
    // Completeness of composition over composable pairs, in name order.
    for (const auto& g : doc_.morphisms)
      for (const auto& f : doc_.morphisms)
        if (f.cod == g.dom && !doc_.compose.count({g.name, f.name}))
          fail_at_end(ParseErrorKind::IncompleteComposition, "missing 'compose " + g.name + " " + f.name + "'");
    const DocumentFlags& s = doc_.structure;
    if (s.monoidal) {
      if (doc_.unit.empty()) fail_at_end(ParseErrorKind::IncompleteTable, "monoidal structure without a unit");
      for (const auto& o : doc_.objects) {
        if (!doc_.lambda.count(o)) fail_at_end(ParseErrorKind::IncompleteTable, "missing 'lambda " + o + "'");
        if (!doc_.rho.count(o)) fail_at_end(ParseErrorKind::IncompleteTable, "missing 'rho " + o + "'");
      }
    }
    if (s.braided && doc_.sigma.empty()) fail_at_end(ParseErrorKind::IncompleteTable, "braided structure without sigma");
    auto every = [&](const std::map<std::string, std::string>& table, const char* kw) {
      for (const auto& f : doc_.morphisms)
        if (!table.count(f.name)) fail_at_end(ParseErrorKind::IncompleteTable, std::string("missing '") + kw + " " + f.name + "'");
    };
    if (s.restriction) every(doc_.restrict, "restrict");
    if (s.corestriction) every(doc_.corestrict, "corestrict");
    try {
      to_bundle(doc_);
    } catch (const Error& e) {
      fail_at_end(ParseErrorKind::Invalid, e.what());
    }
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::vector<Token> toks_;
  CategoryDocument doc_;
  std::set<std::string> objects_;
  std::unordered_map<std::string, MorphismDecl> morphisms_;
  bool format_seen_ = false;
  bool declared_structure_ = false;
  bool started_ = false;
};

}  // namespace

CategoryDocument parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const CategoryDocument& doc) {
  std::ostringstream out;
  out << "# tensorrest category\n"
      << "# `compose g f = h` states g ∘ f = h: apply f first, then g.\n"
      << "# Identities are implicit; each is the unit of the compose table.\n"
      << "format " << doc.format << "\n";
  const DocumentFlags& s = doc.structure;
  if (s.monoidal || s.restriction || s.corestriction) {
    out << "structure";
    if (s.monoidal) out << " monoidal";
    if (s.braided) out << " braided";
    if (s.restriction) out << " restriction";
    if (s.corestriction) out << " corestriction";
    out << "\n";
  }
  for (const auto& o : doc.objects) out << "object " << o << "\n";
  for (const auto& m : doc.morphisms) out << "morphism " << m.name << " : " << m.dom << " -> " << m.cod << "\n";
  for (const auto& [k, v] : doc.compose) out << "compose " << k[0] << " " << k[1] << " = " << v << "\n";
  if (s.monoidal) {
    out << "unit " << doc.unit << "\n";
    for (const auto& [k, v] : doc.tensor_obj) out << "tensor_obj " << k[0] << " " << k[1] << " = " << v << "\n";
    for (const auto& [k, v] : doc.tensor_mor) out << "tensor_mor " << k[0] << " " << k[1] << " = " << v << "\n";
    for (const auto& [k, v] : doc.lambda) out << "lambda " << k << " = " << v << "\n";
    for (const auto& [k, v] : doc.rho) out << "rho " << k << " = " << v << "\n";
    for (const auto& [k, v] : doc.alpha) out << "alpha " << k[0] << " " << k[1] << " " << k[2] << " = " << v << "\n";
    for (const auto& [k, v] : doc.sigma) out << "sigma " << k[0] << " " << k[1] << " = " << v << "\n";
  }
  if (s.restriction)
    for (const auto& [k, v] : doc.restrict) out << "restrict " << k << " = " << v << "\n";
  if (s.corestriction)
    for (const auto& [k, v] : doc.corestrict) out << "corestrict " << k << " = " << v << "\n";
  return out.str();
}

CategoryDocument to_document(const Bundle& b) {
  const FinCategory& c = b.category;
  const std::size_t k = c.object_count();
  const std::size_t n = c.morphism_count();
  std::vector<std::string> on(k), mn(n);
  for (std::size_t i = 0; i < k; ++i) on[i] = padded('o', i, k);
  for (std::size_t i = 0; i < n; ++i) mn[i] = padded('m', i, n);
  CategoryDocument doc;
  doc.objects = on;
  for (std::size_t i = 0; i < n; ++i) doc.morphisms.push_back({mn[i], on[c.dom(MorId(i)).index], on[c.cod(MorId(i)).index]});
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (auto h = c.try_compose(MorId(g), MorId(f))) doc.compose[{mn[g], mn[f]}] = mn[h->index];
  if (b.monoidal) {
    const MonoidalData& m = *b.monoidal;
    doc.structure.monoidal = true;
    doc.structure.braided = m.braided();
    doc.unit = on[m.unit.index];
    for (std::size_t a = 0; a < k; ++a) {
      doc.lambda[on[a]] = mn[m.lambda[a].index];
      doc.rho[on[a]] = mn[m.rho[a].index];
      for (std::size_t bb = 0; bb < k; ++bb) {
        if (auto t = m.tensor(ObjId(a), ObjId(bb))) doc.tensor_obj[{on[a], on[bb]}] = on[t->index];
        if (auto s = m.braided() ? m.sigma_at(ObjId(a), ObjId(bb)) : std::nullopt) doc.sigma[{on[a], on[bb]}] = mn[s->index];
        for (std::size_t cc = 0; cc < k; ++cc)
          if (auto al = m.alpha_at(ObjId(a), ObjId(bb), ObjId(cc))) doc.alpha[{on[a], on[bb], on[cc]}] = mn[al->index];
      }
    }
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g)
        if (auto t = m.tensor(MorId(f), MorId(g))) doc.tensor_mor[{mn[f], mn[g]}] = mn[t->index];
  }
  if (b.restriction) {
    doc.structure.restriction = true;
    for (std::size_t f = 0; f < n; ++f) doc.restrict[mn[f]] = mn[b.restriction->bar[f].index];
  }
  if (b.corestriction) {
    doc.structure.corestriction = true;
    for (std::size_t f = 0; f < n; ++f) doc.corestrict[mn[f]] = mn[b.corestriction->hat[f].index];
  }
  return doc;
}

Bundle to_bundle(const CategoryDocument& doc) {
  auto bad = [](const std::string& msg) { return Error(ErrorKind::InvalidArgument, msg); };
  std::vector<std::string> objects = doc.objects;
  std::vector<MorphismDecl> morphisms = doc.morphisms;
  std::sort(objects.begin(), objects.end());
  std::sort(morphisms.begin(), morphisms.end());
  std::unordered_map<std::string, std::uint32_t> oi, mi;
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (!oi.emplace(objects[i], static_cast<std::uint32_t>(i)).second) throw bad("object '" + objects[i] + "' is declared twice");
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (!mi.emplace(morphisms[i].name, static_cast<std::uint32_t>(i)).second)
      throw bad("morphism '" + morphisms[i].name + "' is declared twice");
  auto o = [&](const std::string& s) {
    auto it = oi.find(s);
    if (it == oi.end()) throw bad("unknown object '" + s + "'");
    return it->second;
  };
  auto m = [&](const std::string& s) {
    auto it = mi.find(s);
    if (it == mi.end()) throw bad("unknown morphism '" + s + "'");
    return it->second;
  };
  const std::size_t k = objects.size();
  const std::size_t n = morphisms.size();
  CategoryTables t;
  t.object_count = k;
  for (const auto& d : morphisms) {
    t.dom.emplace_back(o(d.dom));
    t.cod.emplace_back(o(d.cod));
  }
  t.compose.assign(n * n, kUndefined);
  for (const auto& [key, h] : doc.compose) t.compose[m(key[0]) * n + m(key[1])] = m(h);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (t.cod[f] == t.dom[g] && t.compose[g * n + f] == kUndefined)
        throw bad("missing 'compose " + morphisms[g].name + " " + morphisms[f].name + "'");
  // The identity on A is the endomorphism e with e ∘ f = f and g ∘ e = g.
  for (std::uint32_t a = 0; a < k; ++a) {
    std::optional<std::uint32_t> found;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
      if (t.dom[e].index != a || t.cod[e].index != a) continue;
      bool unit = true;
      for (std::uint32_t f = 0; f < n && unit; ++f) {
        if (t.cod[f].index == a && t.compose[e * n + f] != f) unit = false;
        if (t.dom[f].index == a && t.compose[f * n + e] != f) unit = false;
      }
      if (unit) found = e;
    }
    if (!found) throw bad("object '" + objects[a] + "' has no identity in the compose table");
    t.identity.emplace_back(*found);
  }
  Bundle b;
  b.category = FinCategory(std::move(t));
  if (doc.structure.monoidal) {
    MonoidalData md;
    if (doc.unit.empty()) throw bad("monoidal structure without a unit");
    md.unit = ObjId(o(doc.unit));
    md.tensor_obj.assign(k * k, kUndefined);
    for (const auto& [key, v] : doc.tensor_obj) md.tensor_obj[o(key[0]) * k + o(key[1])] = o(v);
    md.tensor_mor.assign(n * n, kUndefined);
    for (const auto& [key, v] : doc.tensor_mor) md.tensor_mor[m(key[0]) * n + m(key[1])] = m(v);
    for (const auto& name : objects) {
      auto l = doc.lambda.find(name);
      auto r = doc.rho.find(name);
      if (l == doc.lambda.end() || r == doc.rho.end()) throw bad("missing unitor on '" + name + "'");
      md.lambda.emplace_back(m(l->second));
      md.rho.emplace_back(m(r->second));
    }
    md.alpha.assign(k * k * k, kUndefined);
    for (const auto& [key, v] : doc.alpha) md.alpha[(o(key[0]) * k + o(key[1])) * k + o(key[2])] = m(v);
    if (doc.structure.braided) {
      md.sigma.assign(k * k, kUndefined);
      for (const auto& [key, v] : doc.sigma) md.sigma[o(key[0]) * k + o(key[1])] = m(v);
    }
    try {
      validate_shape(b.category, md);
    } catch (const Error& e) {
      throw bad(e.what());
    }
    b.monoidal = std::move(md);
  }
  auto table = [&](const std::map<std::string, std::string>& src, const char* kw) {
    std::vector<MorId> out;
    for (const auto& d : morphisms) {
      auto it = src.find(d.name);
      if (it == src.end()) throw bad(std::string("missing '") + kw + " " + d.name + "'");
      out.emplace_back(m(it->second));
    }
    return out;
  };
  if (doc.structure.restriction) b.restriction = RestrictionData{table(doc.restrict, "restrict")};
  if (doc.structure.corestriction) b.corestriction = CorestrictionData{table(doc.corestrict, "corestrict")};
  return b;
}

std::vector<std::string> morphism_names(const CategoryDocument& doc) {
  std::vector<MorphismDecl> ms = doc.morphisms;
  std::sort(ms.begin(), ms.end());
  std::vector<std::string> out;
  for (const auto& d : ms) out.push_back(d.name);
  return out;
}

}  // namespace tensorrest
