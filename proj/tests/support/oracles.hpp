#pragma once

// Independent reference implementations used only by the tests.  None of
// them share code with the library beyond the LittlewoodSample type.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "littlewood/polyring.hpp"

namespace oracle {

using IntPoly = std::vector<std::int64_t>;  // lowest degree first

IntPoly to_int_poly(const littlewood::LittlewoodSample& f);
/// f(X + 1) by binomial expansion in 128-bit arithmetic.
IntPoly shift_by_one(const IntPoly& f);
/// 2-adic valuation, -1 for zero.
int v2(std::int64_t x);

/// Plain-vector arithmetic over F_p.
using ModPoly = std::vector<std::uint32_t>;
ModPoly trim(ModPoly a);
ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint32_t p);
ModPoly rem(ModPoly a, const ModPoly& m, std::uint32_t p);  // m monic

/// Irreducibility by trial division by every monic polynomial of degree <= n/2.
bool irreducible_by_trial(const ModPoly& f, std::uint32_t p);
/// Number of monic irreducibles of degree d over F_p, via Moebius inversion.
std::uint64_t irreducible_count(std::uint32_t p, unsigned d);

/// True when f has a nontrivial factorization over Z.  Candidates come from
/// products of subsets of complex roots; every candidate is confirmed by
/// exact integer division, so a true result is always correct.
bool reducible_over_q(const littlewood::LittlewoodSample& f);

/// Counts of sum e_i X^i mod D over every sign vector, by direct enumeration.
/// Key is the residue coefficient vector.
std::map<ModPoly, std::uint64_t> enumerate_residues(const ModPoly& D, std::size_t n, std::uint32_t p);

/// Least t with a^t = 1 mod m, by repeated multiplication.
std::uint64_t naive_order(std::uint64_t a, std::uint64_t m);

}  // namespace oracle
