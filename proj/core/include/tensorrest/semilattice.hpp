#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tensorrest/law_report.hpp"

namespace tensorrest {

/// A finite meet-semilattice given by its meet table, `meet_table[a * size + b]`.
struct Semilattice {
  std::size_t size = 0;
  std::vector<std::uint32_t> meet_table;
  std::uint32_t top = 0;

  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const { return meet_table[a * size + b]; }
  bool leq(std::uint32_t a, std::uint32_t b) const { return meet(a, b) == a; }

  friend bool operator==(const Semilattice&, const Semilattice&) = default;
};

/// Associativity, commutativity, idempotence and top-neutrality. Witnesses
/// hold element indices (wrapped as MorId).
LawReport check_semilattice_laws(const Semilattice& l);

/// A bijection phi with phi(a ∧ b) = phi(a) ∧ phi(b) and phi(top) = top.
std::optional<std::vector<std::uint32_t>> find_semilattice_isomorphism(const Semilattice& a, const Semilattice& b);

}  // namespace tensorrest
