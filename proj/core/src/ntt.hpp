#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace littlewood::detail {

// Number-theoretic transform over 998244353 = 119 * 2^23 + 1.
inline constexpr std::uint32_t kNttPrime = 998244353;
inline constexpr std::size_t kNttMaxLength = std::size_t{1} << 23;

// True when the exact integer convolution of two vectors with entries in
// [0, p) and the given lengths fits below kNttPrime, so a single transform
// recovers it without CRT.
bool ntt_convolution_is_exact(std::size_t len_a, std::size_t len_b, std::uint32_t p) noexcept;

// Integer convolution of a and b, exact under ntt_convolution_is_exact,
// with the result reduced mod p.
std::vector<std::uint32_t> ntt_convolve(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b, std::uint32_t p);

}  // namespace littlewood::detail
