#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tensorrest/fincat.hpp"
#include "tensorrest/law_report.hpp"
#include "tensorrest/monoidal.hpp"
#include "tensorrest/semilattice.hpp"

namespace tensorrest {

/// f ↦ f̄, one entry per morphism.
struct RestrictionData {
  std::vector<MorId> bar;
  MorId operator()(MorId f) const { return bar[f.index]; }
  friend bool operator==(const RestrictionData&, const RestrictionData&) = default;
};

/// f ↦ f̂, one entry per morphism. Also used for range operators.
struct CorestrictionData {
  std::vector<MorId> hat;
  MorId operator()(MorId f) const { return hat[f.index]; }
  friend bool operator==(const CorestrictionData&, const CorestrictionData&) = default;
};

/// f̄ = id_dom(f).
RestrictionData trivial_restriction(const FinCategory& c);
/// f̂ = id_cod(f).
CorestrictionData trivial_corestriction(const FinCategory& c);

/// R1 f∘f̄ = f; R2 f̄∘ḡ = ḡ∘f̄; R3 rest(g∘f̄) = ḡ∘f̄; R4 ḡ∘f = f∘rest(g∘f).
LawReport check_R_axioms(const FinCategory& c, const RestrictionData& r);
/// Standard consequences of R1–R4: rest(f̄) = f̄, rest(g∘f) = rest(ḡ∘f), monos are total.
LawReport check_R_consequences(const FinCategory& c, const RestrictionData& r);
/// CR1 f̂∘f = f; CR2 f̂∘ĝ = ĝ∘f̂; CR3 hat(ĝ∘f) = ĝ∘f̂; CR4 g∘f̂ = hat(g∘f)∘g.
LawReport check_CR_axioms(const FinCategory& c, const CorestrictionData& cr);
/// RR1 rest(f̂) = f̂; RR2 f̂∘f = f; RR3 hat(ḡ∘f) = ḡ∘f̂; RR4 hat(g∘f̂) = hat(g∘f).
LawReport check_RR_axioms(const FinCategory& c, const RestrictionData& r, const CorestrictionData& range);
/// BR1 hat(f̄) = f̄; BR2 rest(f̂) = f̂.
LawReport check_BR_axioms(const FinCategory& c, const RestrictionData& r, const CorestrictionData& cr);

/// The endomorphisms e of A with ē = e, ascending.
std::vector<MorId> restriction_idempotent_list(const FinCategory& c, const RestrictionData& r, ObjId a);
/// O(A) with meet = composition; element i is restriction_idempotent_list(...)[i].
Semilattice restriction_idempotents(const FinCategory& c, const RestrictionData& r, ObjId a);

bool is_restriction_total(const FinCategory& c, const RestrictionData& r, MorId f);

/// T[X]: the wide subcategory of restriction-total maps, re-indexed in
/// ascending order of the ambient MorIds.
struct TotalSubcategory {
  FinCategory category;
  std::optional<MonoidalData> monoidal;
  /// T[X] → X.
  Functor embedding;
  /// Ambient MorId → index in T[X], kUndefined for partial maps.
  std::vector<std::uint32_t> index_of;
};

/// When `m` is given, the tensor is inherited; throws InvariantViolation if
/// a tensor or coherence component is not total.
TotalSubcategory total_subcategory(const FinCategory& c, const RestrictionData& r,
                                   const MonoidalData* m = nullptr);

/// The unique g with g∘f = f̄ and f∘g = ḡ.
std::optional<MorId> restriction_inverse(const FinCategory& c, const RestrictionData& r, MorId f);
bool is_inverse_category(const FinCategory& c, const RestrictionData& r);

/// rest(f ⊗ g) = rest f ⊗ rest g wherever f ⊗ g exists.
LawReport check_monoidal_restriction(const FinCategory& c, const MonoidalData& m, const RestrictionData& r);

/// a • f = λ_B ∘ (a ⊗ f) ∘ λ_A⁻¹ for a scalar a : I → I.
MorId scalar_mult(const FinCategory& c, const MonoidalData& m, MorId a, MorId f);

/// rest(s∘t) = rest s ∘ rest t on scalars, rest lands in O(I), and
/// e ↦ e • X is a semilattice map O(I) → O(X) for every X.
LawReport check_scalar_lemmas(const FinCategory& c, const MonoidalData& m, const RestrictionData& r);

}  // namespace tensorrest
