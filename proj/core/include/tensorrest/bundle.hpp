#pragma once

#include <optional>

#include "tensorrest/fincat.hpp"
#include "tensorrest/monoidal.hpp"
#include "tensorrest/restriction.hpp"

namespace tensorrest {

/// A finite category with whichever extra structure it carries.
struct Bundle {
  FinCategory category;
  std::optional<MonoidalData> monoidal;
  std::optional<RestrictionData> restriction;
  std::optional<CorestrictionData> corestriction;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

}  // namespace tensorrest
