#pragma once

// Integer-side structure: multiplicative orders, the primes for which 2
// generates (Z/p^2 Z)^x, prime-power cyclotomic polynomials, and the sets of
// degrees of cyclotomic subproducts that a rational factor could have.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "littlewood/polyring.hpp"

namespace littlewood {

bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::vector<PrimePower> factor_integer(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept;

/// Least t >= 1 with a^t = 1 (mod m).  Requires m >= 2 and gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

struct ArtinRecord {
  std::uint64_t p;
  std::uint64_t ord_mod_p;
  std::uint64_t ord_mod_p2;
  /// 2 generates (Z/p^2 Z)^x, i.e. ord_mod_p2 = p(p - 1).
  bool qualifies;
  /// qualifies and p >= 7: inside the hypothesis of the special-degree theorem.
  bool theorem_applies;
  /// Largest k <= 4 for which ord(2 mod p^k) = phi(p^k) was confirmed
  /// (0 when the record does not qualify).
  unsigned lifting_checked_to;
};

/// One record per odd prime p <= p_max.
std::vector<ArtinRecord> artin_scan(std::uint64_t p_max);
ArtinRecord artin_record(std::uint64_t p);

/// Phi_{p^k} mod q, computed as Psi(X^(p^(k-1))) with Psi = 1 + X + ... + X^(p-1).
PolyMod cyclotomic_prime_power(std::uint64_t p, unsigned k, Residue q);

/// Degrees k > n^(1/10) of cyclotomic subproducts whose largest factor is
/// Phi_{p^(j+1)}; they lie in [p^j, p^(j+1)).
struct SubproductDegreeSet {
  std::size_t j;
  std::vector<std::uint64_t> degrees;  // ascending
  std::uint64_t lower;                 // p^j
  std::uint64_t upper;                 // p^(j+1), exclusive
};

/// Sets for j = 0..r-2.  Requires n = p^r - 1 and r >= 2.
std::vector<SubproductDegreeSet> subproduct_degree_sets(std::uint64_t p, unsigned r, std::uint64_t n);

/// Exact test k^10 > n.
bool exceeds_tenth_root(std::uint64_t k, std::uint64_t n) noexcept;

/// Largest s >= 0 with p^s <= n^(1/10), i.e. p^(10 s) <= n.  This is the
/// lower summation index in the union bound over subproduct degrees; named
/// s_floor to keep it apart from the Fourier exponent s.
unsigned s_floor(std::uint64_t p, std::uint64_t n);

/// p^e, throwing std::overflow_error past 2^64.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

}  // namespace littlewood
