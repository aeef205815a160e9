#include <doctest.h>

#include <stdexcept>

#include <random>

#include "littlewood/polyring.hpp"
#include "oracles.hpp"

using namespace littlewood;

namespace {

PolyMod random_poly(std::mt19937_64& gen, Residue p, std::size_t size) {
  std::vector<Residue> c(size);
  for (auto& x : c) x = static_cast<Residue>(gen() % p);
  return PolyMod(p, std::move(c));
}

oracle::ModPoly plain(const PolyMod& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

}  // namespace

TEST_CASE("construction reduces and trims") {
  const PolyMod f(5, {7, 0, 10, 0});
  CHECK(f.size() == 1);
  CHECK(f.coeff(0) == 2);
  CHECK(f.degree() == 0u);

  const std::vector<std::int64_t> ints{-1, 6, -11};
  const auto g = PolyMod::from_integers(5, ints);
  CHECK(plain(g) == oracle::ModPoly{4, 1, 4});

  CHECK(PolyMod(7).is_zero());
  CHECK(PolyMod(7).degree().is_minus_infinity());
  CHECK(PolyMod(7).degree() < Degree(0));
  CHECK_THROWS_AS(PolyMod(7).degree().value(), std::domain_error);
  CHECK_THROWS_AS(PolyMod(4), std::invalid_argument);
  CHECK_THROWS_AS(PolyMod(65537), std::invalid_argument);
}

TEST_CASE("multiplication matches schoolbook oracle") {
  std::mt19937_64 gen(11);
  for (Residue p : {2u, 3u, 5u, 257u, 65521u}) {
    for (std::size_t len : {1u, 5u, 47u, 48u, 200u, 1500u}) {
      const auto a = random_poly(gen, p, len);
      const auto b = random_poly(gen, p, len + 3);
      CHECK(plain(a * b) == oracle::mul(plain(a), plain(b), p));
    }
  }
}

TEST_CASE("division identity and gcd") {
  std::mt19937_64 gen(12);
  for (Residue p : {2u, 3u, 7u, 65521u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_poly(gen, p, 1 + gen() % 300);
      auto b = random_poly(gen, p, 1 + gen() % 60);
      if (b.is_zero()) b = PolyMod::one(p);
      const auto [q, r] = divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());

      const auto c = random_poly(gen, p, 2 + gen() % 10);
      if (c.is_constant()) continue;
      const auto g = gcd(a * c, b * c);
      CHECK(g.is_monic());
      CHECK((g % c.monic()).is_zero());
      CHECK(((a * c) % g).is_zero());
    }
  }
  CHECK_THROWS_AS(divrem(PolyMod::one(3), PolyMod(3)), std::domain_error);
  CHECK_THROWS_AS(gcd(PolyMod(3), PolyMod(3)), std::invalid_argument);
  CHECK_THROWS_AS(PolyMod::one(3) + PolyMod::one(5), std::invalid_argument);
}

TEST_CASE("modulus context agrees with plain remainder") {
  std::mt19937_64 gen(13);
  for (Residue p : {3u, 5u, 65521u}) {
    for (std::size_t d : {10u, 127u, 128u, 400u, 2049u}) {
      auto m = random_poly(gen, p, d);
      m += PolyMod::monomial(p, d);
      const ModulusContext ctx(m);
      const auto a = random_poly(gen, p, d);
      const auto b = random_poly(gen, p, d);
      CHECK(ctx.mulmod(a, b) == (a * b) % m);
      CHECK(ctx.reduce(a * b * a) == (a * b * a) % m);
    }
  }
}

TEST_CASE("powmod agrees with repeated multiplication") {
  std::mt19937_64 gen(14);
  const Residue p = 7;
  auto m = random_poly(gen, p, 20) + PolyMod::monomial(p, 20);
  const auto base = random_poly(gen, p, 25);
  PolyMod acc = PolyMod::one(p);
  for (std::uint64_t e = 0; e < 40; ++e) {
    CHECK(powmod(base, e, m) == acc % m);
    acc = (acc * base) % m;
  }
  // Fermat in F_p[X]/(X - a): X^p = X.
  CHECK(powmod(PolyMod::x(p), p, PolyMod(p, {3, 1})) == PolyMod(p, {4}));
}

TEST_CASE("inverse_mod") {
  for (Residue p : {2u, 3u, 13u, 65521u}) {
    for (Residue a = 1; a < std::min<Residue>(p, 200); ++a) {
      CHECK((std::uint64_t{a} * inverse_mod(a, p)) % p == 1);
    }
  }
  CHECK_THROWS(inverse_mod(0, 7));
}

TEST_CASE("Littlewood samples") {
  const auto f = LittlewoodSample::parse("+--+");
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "+--+");
  CHECK(f.leading_sign() == 1);
  CHECK(LittlewoodSample::from_bits(0b0110, 3) == f);
  CHECK(f.negated().to_string() == "-++-");
  CHECK(f.negated().normalized() == f);
  CHECK(plain(reduce(f, 3)) == oracle::ModPoly{1, 2, 2, 1});
  CHECK(plain(reduce(LittlewoodSample::all_ones(4), 2)) == oracle::ModPoly{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(LittlewoodSample::parse("+0-"), std::invalid_argument);
  CHECK_THROWS_AS(LittlewoodSample::parse(""), std::invalid_argument);
}

TEST_CASE("shift by one mod 4 matches exact binomial expansion") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); bits += 1 + bits / 7) {
      const auto f = LittlewoodSample::from_bits(bits, n);
      const auto exact = oracle::shift_by_one(oracle::to_int_poly(f));
      const auto g = shift_compose_mod4(f);
      REQUIRE(g.size() == n + 1);
      for (std::size_t i = 0; i <= n; ++i) CHECK(g[i] == ((exact[i] % 4) + 4) % 4);
    }
  }
}

TEST_CASE("parse and format") {
  const auto f = parse_poly("1, 2,0,1", 3);
  CHECK(format_poly(f) == "1,2,0,1");
  CHECK(format_poly(PolyMod(3)) == "0");
  CHECK(parse_poly("0", 5).is_zero());
  CHECK_THROWS_AS(parse_poly("1,x", 3), std::invalid_argument);
}
