#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tensorrest/bundle.hpp"
#include "tensorrest/law_report.hpp"
#include "tensorrest/semilattice.hpp"

namespace tensorrest {

class SCategory;

/// Size caps; exceeding one raises SizeBudgetExceeded.
struct GeneratorLimits {
  std::size_t max_semilattice = 8;
  std::size_t max_set = 3;
  std::size_t max_group = 6;
  std::size_t max_morphisms = 20000;
};

using SemilatticeSpec = Semilattice;

/// 0 < 1 < … < n-1, top n-1.
Semilattice chain_semilattice(std::size_t n);
/// ⊥, a, b, ⊤ with a ∧ b = ⊥.
Semilattice diamond_semilattice();
/// Downward-closed subsets of the Boolean algebra 2^k (the empty one
/// included) under intersection, ordered by their bitmask.
Semilattice boolean_ideal_semilattice(std::size_t k, const GeneratorLimits& limits = {});
/// "chain<n>", "diamond" or "boolean<k>".
Semilattice semilattice_by_name(const std::string& name, const GeneratorLimits& limits = {});

/// The posetal category of L with ⊗ = ∧ and unit the top; strict, σ = id.
Bundle from_semilattice(const Semilattice& l, const GeneratorLimits& limits = {});

/// Morphisms x → y are the s with x ∧ s ≤ y, ordered by (x, y, s).
/// Composition is meet, identities are the top, restriction of s : x → y
/// is s : x → x and corestriction is s : y → y.
Bundle depressing_downsets(const Semilattice& l, const GeneratorLimits& limits = {});

/// Skeletal sets 0..n and partial functions. Morphisms are ordered by
/// (dom, cod, values) with the values read as a base-(cod+1) number, the
/// first element most significant and "undefined" the lowest digit.
/// A ⊗ B = A·B when it fits, pairing (i, j) ↦ i·|B| + j. Restriction is
/// the domain of definition and the corestriction slot holds the image.
Bundle finpar(std::size_t n_max, const GeneratorLimits& limits = {});
/// Total functions only, same encoding with base cod.
Bundle finset_monoidal(std::size_t n_max, const GeneratorLimits& limits = {});
/// Index of a partial function in finpar(n_max); values use -1 for undefined.
MorId finpar_morphism(std::size_t n_max, std::span<const int> values, std::size_t cod);
MorId finset_morphism(std::size_t n_max, std::span<const int> values, std::size_t cod);

/// One object, morphisms k = 0..n-1 composed and tensored by addition mod n.
Bundle cyclic_group_category(std::size_t n, const GeneratorLimits& limits = {});

/// Zero morphisms absorb on both sides and every object other than
/// `terminal` has exactly one morphism into it.
LawReport check_zero_morphisms(const FinCategory& x, const std::function<bool(MorId)>& is_zero, ObjId terminal);
/// The [∅, !] morphisms of S[finset(n_max)] are zero morphisms and ∅ is terminal.
LawReport free_zero_check(std::size_t n_max, const GeneratorLimits& limits = {});
LawReport free_zero_check(const SCategory& s);

}  // namespace tensorrest
