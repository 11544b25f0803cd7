#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorrest/ids.hpp"

namespace tensorrest {

/// One failed instance of a law. `witness` is the tuple of morphisms the law
/// was instantiated at (object-level laws use identities). `lhs`/`rhs` hold
/// the two sides when the law is an equation; existence and uniqueness
/// failures leave them empty.
struct Violation {
  std::string axiom;
  std::vector<MorId> witness;
  std::optional<MorId> lhs;
  std::optional<MorId> rhs;

  friend auto operator<=>(const Violation&, const Violation&) = default;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a law suite. Violations are kept sorted and deduplicated, so
/// two runs over the same input compare equal.
class LawReport {
 public:
  void add(Violation v);
  void add(std::string axiom, std::initializer_list<MorId> witness,
           std::optional<MorId> lhs = std::nullopt, std::optional<MorId> rhs = std::nullopt);
  void merge(const LawReport& other);

  bool ok() const noexcept { return violations_.empty(); }
  std::size_t size() const { return violations().size(); }
  std::size_t count(std::string_view axiom) const;
  bool has(std::string_view axiom) const { return count(axiom) > 0; }

  const std::vector<Violation>& violations() const;

  friend bool operator==(const LawReport& a, const LawReport& b) {
    return a.violations() == b.violations();
  }

 private:
  void normalize() const;

  mutable std::vector<Violation> violations_;
  mutable bool dirty_ = false;
};

}  // namespace tensorrest
