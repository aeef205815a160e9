#include "littlewood/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "modarith.hpp"
#include "poly_access.hpp"

namespace littlewood {
namespace {

using detail::uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  while (b) a = std::exchange(b, a % b);
  return a;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor_integer(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factor 0");
  std::vector<PrimePower> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.push_back({q, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [q, e] : factor_integer(n)) phi = phi / q * (q - 1);
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("multiplicative order needs m >= 2");
  if (gcd_u64(a % m, m) != 1) {
    throw std::invalid_argument("multiplicative order needs gcd(a, m) = 1");
  }
  std::uint64_t order = euler_phi(m);
  for (const auto& [q, e] : factor_integer(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / q, m) != 1) break;
      order /= q;
    }
  }
  return order;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (p != 0 && out > std::numeric_limits<std::uint64_t>::max() / p) {
      throw std::overflow_error(std::to_string(p) + "^" + std::to_string(e) + " exceeds 64 bits");
    }
    out *= p;
  }
  return out;
}

ArtinRecord artin_record(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("artin_record needs an odd prime");
  if (p > 0xffffffffULL) throw std::invalid_argument("artin_record needs p < 2^32");
  ArtinRecord rec{p, multiplicative_order(2, p), multiplicative_order(2, p * p), false, false, 0};
  rec.qualifies = rec.ord_mod_p2 == p * (p - 1);
  rec.theorem_applies = rec.qualifies && p >= 7;
  if (rec.qualifies) {
    // 2 generating mod p^2 lifts to every p^k; confirm while p^k fits.
    std::uint64_t pk = p * p;
    rec.lifting_checked_to = 2;
    for (unsigned k = 3; k <= 4; ++k) {
      if (pk > std::numeric_limits<std::uint64_t>::max() / p) break;
      pk *= p;
      if (multiplicative_order(2, pk) != pk / p * (p - 1)) break;
      rec.lifting_checked_to = k;
    }
  }
  return rec;
}

std::vector<ArtinRecord> artin_scan(std::uint64_t p_max) {
  if (p_max < 2) throw std::invalid_argument("artin_scan needs p_max >= 2");
  std::vector<ArtinRecord> out;
  for (std::uint64_t p = 3; p <= p_max; p += 2) {
    if (is_prime(p)) out.push_back(artin_record(p));
  }
  return out;
}

PolyMod cyclotomic_prime_power(std::uint64_t p, unsigned k, Residue q) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic_prime_power needs a prime p");
  if (k == 0) throw std::invalid_argument("cyclotomic_prime_power needs k >= 1");
  if (q == p) throw std::invalid_argument("cyclotomic polynomial requested in characteristic p");
  const std::uint64_t stride = checked_pow(p, k - 1);
  const std::uint64_t degree = stride * (p - 1);
  if (degree > (std::uint64_t{1} << 32)) throw std::invalid_argument("cyclotomic degree too large");
  PolyMod modulus_check(q);  // validates q
  std::vector<Residue> coeffs(degree + 1, 0);
  for (std::uint64_t i = 0; i < p; ++i) coeffs[i * stride] = 1;
  return detail::PolyAccess::make(q, std::move(coeffs));
}

bool exceeds_tenth_root(std::uint64_t k, std::uint64_t n) noexcept {
  if (k <= 1) return k > n;  // 0^10 = 0, 1^10 = 1
  uint128 acc = 1;
  for (int i = 0; i < 10; ++i) {
    acc *= k;
    if (acc > n) return true;
  }
  return false;
}

unsigned s_floor(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw std::invalid_argument("s_floor needs p >= 2");
  unsigned s = 0;
  // p^(10(s+1)) <= n
  for (;;) {
    uint128 acc = 1;
    bool fits = true;
    for (unsigned i = 0; i < 10 * (s + 1); ++i) {
      acc *= p;
      if (acc > n) {
        fits = false;
        break;
      }
    }
    if (!fits) return s;
    ++s;
  }
}

std::vector<SubproductDegreeSet> subproduct_degree_sets(std::uint64_t p, unsigned r, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("subproduct_degree_sets needs a prime p");
  if (r < 2) throw std::invalid_argument("subproduct_degree_sets needs r >= 2");
  if (checked_pow(p, r) - 1 != n) throw std::invalid_argument("n must equal p^r - 1");
  if (r - 1 > 40) throw std::invalid_argument("too many subproduct sets to enumerate");

  std::vector<SubproductDegreeSet> out;
  std::set<std::uint64_t> lower_sums{0};  // subset sums of phi(p^(i+1)) for i < j
  for (std::size_t j = 0; j + 2 <= r; ++j) {
    const std::uint64_t pj = checked_pow(p, static_cast<unsigned>(j));
    const std::uint64_t top = pj * (p - 1);  // phi(p^(j+1))
    SubproductDegreeSet set{j, {}, pj, pj * p};
    for (std::uint64_t s : lower_sums) {
      const std::uint64_t k = top + s;
      if (exceeds_tenth_root(k, n)) set.degrees.push_back(k);
    }
    std::set<std::uint64_t> next = lower_sums;
    for (std::uint64_t s : lower_sums) next.insert(s + top);
    lower_sums = std::move(next);
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace littlewood
