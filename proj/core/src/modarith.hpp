#pragma once

#include <cstdint>

namespace littlewood::detail {

__extension__ using uint128 = unsigned __int128;

// Lemire's fastmod for a fixed 32-bit divisor.
class FastMod {
 public:
  explicit FastMod(std::uint32_t d) noexcept : d_(d), m_(~std::uint64_t{0} / d + 1) {}

  std::uint32_t operator()(std::uint32_t a) const noexcept {
    const std::uint64_t low = m_ * a;
    return static_cast<std::uint32_t>((static_cast<uint128>(low) * d_) >> 64);
  }

  std::uint32_t divisor() const noexcept { return d_; }

 private:
  std::uint32_t d_;
  std::uint64_t m_;
};

}  // namespace littlewood::detail
