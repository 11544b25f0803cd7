#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tensorrest/bundle.hpp"

namespace tensorrest {

struct DocumentFlags {
  bool monoidal = false;
  bool braided = false;
  bool restriction = false;
  bool corestriction = false;

  friend bool operator==(const DocumentFlags&, const DocumentFlags&) = default;
};

struct MorphismDecl {
  std::string name;
  std::string dom;
  std::string cod;

  friend auto operator<=>(const MorphismDecl&, const MorphismDecl&) = default;
};

/// A `.cat` file held by name. Objects and morphisms are kept sorted by
/// name, and the sorted position is the index used by to_bundle.
struct CategoryDocument {
  using Key2 = std::array<std::string, 2>;
  using Key3 = std::array<std::string, 3>;

  int format = 1;
  DocumentFlags structure;
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  /// {g, f} → g ∘ f.
  std::map<Key2, std::string> compose;

  std::string unit;
  std::map<Key2, std::string> tensor_obj;
  std::map<Key2, std::string> tensor_mor;
  std::map<std::string, std::string> lambda;
  std::map<std::string, std::string> rho;
  std::map<Key3, std::string> alpha;
  std::map<Key2, std::string> sigma;

  std::map<std::string, std::string> restrict;
  std::map<std::string, std::string> corestrict;

  friend bool operator==(const CategoryDocument&, const CategoryDocument&) = default;
};

/// Reads a document, stopping at the first error (ParseError with 1-based
/// line and column). Identities are not written in the file; each object's
/// identity is the endomorphism that acts as a unit in the composition
/// table.
CategoryDocument parse(std::string_view text);
/// Canonical text: a header comment, then one statement per line with
/// every section sorted by name.
std::string serialize(const CategoryDocument& doc);

/// Names objects o0.. and morphisms m0.., zero-padded so that name order
/// is index order.
CategoryDocument to_document(const Bundle& b);
/// Throws Error(InvalidArgument) when a name is unknown or a table is
/// incomplete.
Bundle to_bundle(const CategoryDocument& doc);

/// Morphism names in index order, for reports.
std::vector<std::string> morphism_names(const CategoryDocument& doc);

}  // namespace tensorrest
