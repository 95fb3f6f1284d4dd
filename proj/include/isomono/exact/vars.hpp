#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace isomono::exact {

// Symbols of the Lax-pair computations. `qdot` stands for dq/dt and only
// appears in second-order Painleve expressions.
enum class VarId : std::size_t { z = 0, p, q, t, th0, th1, thinf, qdot };

struct LaxVars {
  using Id = VarId;
  static constexpr std::size_t count = 8;
  static constexpr std::array<std::string_view, count> names = {
      "z", "p", "q", "t", "th0", "th1", "thinf", "qdot"};
};

// Coordinates and parameter slots of the monodromy cubic surfaces.
enum class CubicVarId : std::size_t { x1 = 0, x2, x3, s1, s2, s3, s4, aux };

struct CubicVars {
  using Id = CubicVarId;
  static constexpr std::size_t count = 8;
  static constexpr std::array<std::string_view, count> names = {
      "x1", "x2", "x3", "s1", "s2", "s3", "s4", "aux"};
};

template <class Vars>
constexpr std::size_t index(typename Vars::Id v) {
  return static_cast<std::size_t>(v);
}

template <class Vars>
std::optional<typename Vars::Id> lookup_var(std::string_view name) {
  for (std::size_t i = 0; i < Vars::count; ++i)
    if (Vars::names[i] == name) return static_cast<typename Vars::Id>(i);
  return std::nullopt;
}

}  // namespace isomono::exact
