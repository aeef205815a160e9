#include <doctest.h>

#include <stdexcept>

#include <set>

#include "littlewood/numtheory.hpp"
#include "oracles.hpp"

using namespace littlewood;

TEST_CASE("primality against a sieve") {
  constexpr std::uint64_t kLimit = 100000;
  std::vector<bool> composite(kLimit + 1, false);
  for (std::uint64_t i = 2; i * i <= kLimit; ++i) {
    if (!composite[i]) {
      for (std::uint64_t j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
  }
  for (std::uint64_t n = 0; n <= kLimit; ++n) CHECK(is_prime(n) == (n >= 2 && !composite[n]));
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime((1ULL << 61) + 1));
}

TEST_CASE("integer factorization and totient") {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    std::uint64_t prod = 1, phi = 1;
    for (const auto& [q, e] : factor_integer(n)) {
      CHECK(is_prime(q));
      std::uint64_t qe = 1;
      for (unsigned i = 0; i < e; ++i) qe *= q;
      prod *= qe;
      phi *= qe / q * (q - 1);
    }
    CHECK(prod == n);
    CHECK(euler_phi(n) == phi);
  }
  CHECK(factor_integer(1155).size() == 4);
}

TEST_CASE("multiplicative order against repeated multiplication") {
  for (std::uint64_t m = 3; m < 700; m += 2) {
    CHECK(multiplicative_order(2, m) == oracle::naive_order(2, m));
  }
  CHECK(multiplicative_order(3, 5) == 4);
  CHECK_THROWS_AS(multiplicative_order(2, 8), std::invalid_argument);
}

TEST_CASE("primes for which 2 generates the units mod p^2") {
  const auto scan = artin_scan(200);
  std::set<std::uint64_t> qualifying, theorem;
  for (const auto& rec : scan) {
    CHECK(rec.p % 2 == 1);
    CHECK(rec.ord_mod_p == oracle::naive_order(2, rec.p));
    CHECK(rec.ord_mod_p2 == oracle::naive_order(2, rec.p * rec.p));
    CHECK(rec.qualifies == (rec.ord_mod_p2 == rec.p * (rec.p - 1)));
    CHECK(rec.theorem_applies == (rec.qualifies && rec.p >= 7));
    if (rec.qualifies) {
      CHECK(rec.lifting_checked_to == 4);
      qualifying.insert(rec.p);
    }
    if (rec.theorem_applies) theorem.insert(rec.p);
  }
  CHECK(scan.size() == 45);
  CHECK(qualifying == std::set<std::uint64_t>{3, 5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83, 101, 107, 131,
                                              139, 149, 163, 173, 179, 181, 197});
  CHECK_FALSE(artin_record(7).qualifies);
  CHECK(artin_record(7).ord_mod_p == 3);
  CHECK(theorem.count(3) == 0);
}

TEST_CASE("prime-power cyclotomic polynomials") {
  const auto phi9 = cyclotomic_prime_power(3, 2, 2);
  CHECK(format_poly(phi9) == "1,0,0,1,0,0,1");
  CHECK(cyclotomic_prime_power(5, 1, 3).degree() == 4u);
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 3}, {5, 2}, {11, 2}, {7, 3}}) {
    for (Residue q : {2u, 3u, 13u}) {
      if (q == p) continue;
      PolyMod prod = PolyMod::one(q);
      for (unsigned k = 1; k <= r; ++k) {
        const auto phi = cyclotomic_prime_power(p, k, q);
        CHECK(phi.degree() == euler_phi(checked_pow(p, k)));
        prod *= phi;
      }
      CHECK(prod == reduce(LittlewoodSample::all_ones(checked_pow(p, r) - 1), q));
    }
  }
  CHECK_THROWS_AS(cyclotomic_prime_power(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_prime_power(3, 0, 2), std::invalid_argument);
}

TEST_CASE("subproduct degree sets against subset enumeration") {
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{11, 3}, {13, 3}, {3, 5}, {5, 4}}) {
    const std::uint64_t n = checked_pow(p, r) - 1;
    const auto sets = subproduct_degree_sets(p, r, n);
    REQUIRE(sets.size() == r - 1);
    for (const auto& set : sets) {
      std::set<std::uint64_t> expected;
      const std::size_t j = set.j;
      for (std::uint64_t mask = 0; mask < (1ULL << j); ++mask) {
        std::uint64_t k = euler_phi(checked_pow(p, static_cast<unsigned>(j + 1)));
        for (std::size_t i = 0; i < j; ++i) {
          if ((mask >> i) & 1) k += euler_phi(checked_pow(p, static_cast<unsigned>(i + 1)));
        }
        long double tenth = 1;
        for (int t = 0; t < 10; ++t) tenth *= static_cast<long double>(k);
        if (tenth > static_cast<long double>(n)) expected.insert(k);
      }
      CHECK(std::set<std::uint64_t>(set.degrees.begin(), set.degrees.end()) == expected);
      CHECK(set.degrees.size() <= (1ULL << j));
      for (auto k : set.degrees) {
        CHECK(k >= set.lower);
        CHECK(k < set.upper);
      }
    }
    CHECK(sets.back().degrees.back() == checked_pow(p, r - 1) - 1);
  }
  CHECK(s_floor(3, 59048) == 0);
  CHECK(s_floor(2, 1024) == 1);
  CHECK_THROWS_AS(subproduct_degree_sets(11, 3, 1000), std::invalid_argument);
}
