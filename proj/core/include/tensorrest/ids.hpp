#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace tensorrest {

// Sentinel used inside flat tables for "no entry" (undefined composite,
// undefined tensor, ...). Never escapes the public API: accessors return
// std::optional instead.
inline constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

/// Dense index of an object, valid in [0, object_count) of one category.
struct ObjId {
  std::uint32_t index = 0;

  constexpr ObjId() = default;
  constexpr explicit ObjId(std::uint32_t i) : index(i) {}
  constexpr explicit ObjId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}
  constexpr explicit ObjId(int i) : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(ObjId, ObjId) = default;
};

/// Dense index of a morphism, valid in [0, morphism_count) of one category.
struct MorId {
  std::uint32_t index = 0;

  constexpr MorId() = default;
  constexpr explicit MorId(std::uint32_t i) : index(i) {}
  constexpr explicit MorId(std::size_t i) : index(static_cast<std::uint32_t>(i)) {}
  constexpr explicit MorId(int i) : index(static_cast<std::uint32_t>(i)) {}

  friend constexpr auto operator<=>(MorId, MorId) = default;
};

}  // namespace tensorrest

template <>
struct std::hash<tensorrest::ObjId> {
  std::size_t operator()(tensorrest::ObjId a) const noexcept { return a.index; }
};

template <>
struct std::hash<tensorrest::MorId> {
  std::size_t operator()(tensorrest::MorId f) const noexcept { return f.index; }
};
