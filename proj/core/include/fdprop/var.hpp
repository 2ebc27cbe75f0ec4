#ifndef FDPROP_VAR_HPP
#define FDPROP_VAR_HPP

#include <cstdint>
#include <functional>

namespace fdprop {

using val_t = std::int64_t;

// Dense variable index. Indices are contiguous 0..n-1 within one model.
struct VarId {
  std::int32_t idx = -1;

  VarId() = default;
  constexpr explicit VarId(std::int32_t i) : idx(i) {}

  constexpr bool valid() const { return idx >= 0; }
  constexpr bool operator==(const VarId&) const = default;
  constexpr auto operator<=>(const VarId&) const = default;
};

using PropId = std::int32_t;

}  // namespace fdprop

template <>
struct std::hash<fdprop::VarId> {
  size_t operator()(const fdprop::VarId& v) const noexcept {
    return std::hash<std::int32_t>()(v.idx);
  }
};

#endif
