#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "tensorrest/bundle.hpp"
#include "tensorrest/fincat.hpp"

namespace tensorrest {

/// Which structure an isomorphism has to preserve on the nose.
struct StructureFlags {
  bool monoidal = false;
  bool restriction = false;
  bool corestriction = false;
};

struct SearchOptions {
  /// Branching decisions before giving up with SearchBudgetExceeded.
  std::uint64_t node_limit = 2'000'000;
};

/// Mutually inverse functors (F : C → D, G : D → C) preserving the flagged
/// structure, or nothing. Morphisms are first partitioned by invariants
/// refined through composition; the search then branches on the morphism
/// with the fewest candidates, lowest index first, and propagates
/// composites, identities, restrictions and tensors of assigned pairs.
std::optional<std::pair<Functor, Functor>> find_isomorphism(const Bundle& c, const Bundle& d,
                                                            StructureFlags flags = {},
                                                            SearchOptions options = {});

std::optional<std::pair<Functor, Functor>> find_isomorphism(const FinCategory& c, const FinCategory& d,
                                                            SearchOptions options = {});

/// Functor laws, mutual inverseness and preservation of the flagged structure.
LawReport check_isomorphism(const Bundle& c, const Bundle& d, const Functor& f, const Functor& g,
                            StructureFlags flags);

}  // namespace tensorrest
