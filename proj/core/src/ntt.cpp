#include "ntt.hpp"

#include <algorithm>
#include <bit>

namespace littlewood::detail {
namespace {

constexpr std::uint32_t kGenerator = 3;

std::uint32_t mul(std::uint32_t a, std::uint32_t b) noexcept {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % kNttPrime);
}

std::uint32_t power(std::uint32_t base, std::uint64_t e) noexcept {
  std::uint32_t result = 1;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void transform(std::vector<std::uint32_t>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::uint32_t> roots;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t w = power(kGenerator, (kNttPrime - 1) / len);
    if (inverse) w = power(w, kNttPrime - 2);
    const std::size_t half = len / 2;
    roots.resize(half);
    roots[0] = 1;
    for (std::size_t k = 1; k < half; ++k) roots[k] = mul(roots[k - 1], w);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t u = a[i + k];
        const std::uint32_t v = mul(a[i + k + half], roots[k]);
        const std::uint32_t s = u + v;
        a[i + k] = s >= kNttPrime ? s - kNttPrime : s;
        a[i + k + half] = u >= v ? u - v : u + kNttPrime - v;
      }
    }
  }
  if (inverse) {
    const std::uint32_t n_inv = power(static_cast<std::uint32_t>(n), kNttPrime - 2);
    for (auto& x : a) x = mul(x, n_inv);
  }
}

}  // namespace

bool ntt_convolution_is_exact(std::size_t len_a, std::size_t len_b, std::uint32_t p) noexcept {
  if (len_a == 0 || len_b == 0) return true;
  if (len_a + len_b - 1 > kNttMaxLength) return false;
  const std::uint64_t bound = std::uint64_t{p - 1} * (p - 1);
  return bound * std::min(len_a, len_b) < kNttPrime;
}

std::vector<std::uint32_t> ntt_convolve(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(out_len);
  std::vector<std::uint32_t> fa(a.begin(), a.end());
  std::vector<std::uint32_t> fb(b.begin(), b.end());
  fa.resize(n);
  fb.resize(n);
  transform(fa, false);
  transform(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = mul(fa[i], fb[i]);
  transform(fa, true);
  fa.resize(out_len);
  for (auto& x : fa) x %= p;
  return fa;
}

}  // namespace littlewood::detail
