#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "tensorrest/ids.hpp"
#include "tensorrest/law_report.hpp"

namespace tensorrest {

/// Raw tables of a finite category. The composition table is indexed
/// `compose[g * n_morphisms + f]` and holds g ∘ f (apply f first), or
/// kUndefined when the pair is not composable.
struct CategoryTables {
  std::size_t object_count = 0;
  std::vector<ObjId> dom;
  std::vector<ObjId> cod;
  std::vector<MorId> identity;
  std::vector<std::uint32_t> compose;
};

/// A finite category stored as explicit tables.
///
/// Construction only checks that every index is in range and that the
/// tables have the right shapes; whether the tables actually form a
/// category is the job of check_category_laws. Hom-sets are a view derived
/// from dom/cod at construction time.
class FinCategory {
 public:
  FinCategory() = default;
  explicit FinCategory(CategoryTables tables);

  std::size_t object_count() const noexcept { return tables_.object_count; }
  std::size_t morphism_count() const noexcept { return tables_.dom.size(); }

  ObjId dom(MorId f) const { return tables_.dom[f.index]; }
  ObjId cod(MorId f) const { return tables_.cod[f.index]; }
  MorId identity(ObjId a) const { return tables_.identity[a.index]; }
  bool is_identity(MorId f) const { return identity(dom(f)) == f; }

  /// g ∘ f, if the table defines it.
  std::optional<MorId> try_compose(MorId g, MorId f) const;
  /// g ∘ f; throws InvariantViolation when undefined.
  MorId compose(MorId g, MorId f) const;

  std::span<const MorId> hom(ObjId a, ObjId b) const;

  bool valid(ObjId a) const noexcept { return a.index < object_count(); }
  bool valid(MorId f) const noexcept { return f.index < morphism_count(); }

  const CategoryTables& tables() const noexcept { return tables_; }

  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  CategoryTables tables_;
  std::vector<std::vector<MorId>> homs_;
};

/// Every violated unit/associativity/typing instance; empty iff C is a category.
LawReport check_category_laws(const FinCategory& c);

/// g ∘ ... ∘ f written in mathematical order: `compose_chain(c, {h, g, f})`
/// is h ∘ g ∘ f. Empty when any factor is empty or a pair does not compose.
std::optional<MorId> compose_chain(const FinCategory& c, std::initializer_list<std::optional<MorId>> factors);

bool is_mono(const FinCategory& c, MorId f);
bool is_epi(const FinCategory& c, MorId f);
/// The two-sided inverse of f, if any.
std::optional<MorId> is_iso(const FinCategory& c, MorId f);
bool is_groupoid(const FinCategory& c);

/// Object and morphism maps between two finite categories.
struct Functor {
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId operator()(ObjId a) const { return obj_map[a.index]; }
  MorId operator()(MorId f) const { return mor_map[f.index]; }

  friend bool operator==(const Functor&, const Functor&) = default;
};

Functor identity_functor(const FinCategory& c);
/// second ∘ first.
Functor compose_functors(const Functor& second, const Functor& first);

/// Dom/cod, identity and composition preservation of F : C → D. Violations
/// cite morphisms of C.
LawReport check_functor(const FinCategory& c, const FinCategory& d, const Functor& f);

/// True iff G ∘ F = id_C and F ∘ G = id_D on objects and morphisms.
bool are_inverse(const FinCategory& c, const FinCategory& d, const Functor& f, const Functor& g);

}  // namespace tensorrest
