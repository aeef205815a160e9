#include <doctest.h>

#include <stdexcept>

#include <random>

#include "littlewood/padic.hpp"
#include "oracles.hpp"

using namespace littlewood;

namespace {

// Lower hull vertices by brute force: a point is a vertex unless it lies on
// or above a chord between a point to its left and one to its right.
std::vector<std::size_t> brute_force_vertices(const std::vector<Valuation>& v) {
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) finite.push_back(i);
  }
  std::vector<std::size_t> out;
  for (std::size_t b : finite) {
    bool vertex = true;
    for (std::size_t a : finite) {
      for (std::size_t c : finite) {
        if (!(a < b && b < c)) continue;
        // (b, v_b) on or above the chord from a to c.
        const auto lhs = static_cast<std::int64_t>(*v[b]) * static_cast<std::int64_t>(c - a);
        const auto rhs = static_cast<std::int64_t>(*v[a]) * static_cast<std::int64_t>(c - b) +
                         static_cast<std::int64_t>(*v[c]) * static_cast<std::int64_t>(b - a);
        if (lhs >= rhs) vertex = false;
      }
    }
    if (vertex) out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("slopes are normalized") {
  CHECK(Slope::make(2, -4) == Slope{-1, 2});
  CHECK(Slope::make(0, 5) == Slope{0, 1});
  CHECK(Slope::make(-1, 3) < Slope::make(-1, 4));
  CHECK_THROWS_AS(Slope::make(1, 0), std::invalid_argument);
}

TEST_CASE("hull of a small example") {
  const std::vector<Valuation> v{3, 1, 2, std::nullopt, 0};
  const auto poly = newton_polygon(v);
  REQUIRE(poly.vertices.size() == 3);
  CHECK(poly.vertices[0] == HullVertex{0, 3});
  CHECK(poly.vertices[1] == HullVertex{1, 1});
  CHECK(poly.vertices[2] == HullVertex{4, 0});
  REQUIRE(poly.segments.size() == 2);
  CHECK(poly.segments[0].height == 2);
  CHECK(poly.segments[0].slope == Slope{-2, 1});
  CHECK(poly.segments[1].width == 3);
  CHECK(poly.segments[1].slope == Slope{-1, 3});
  CHECK_THROWS_AS(newton_polygon(std::vector<Valuation>{1, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(newton_polygon(std::vector<Valuation>{}), std::invalid_argument);
}

TEST_CASE("hull matches brute force on random valuations") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Valuation> v(2 + gen() % 20);
    for (auto& x : v) {
      if (gen() % 5 != 0) x = static_cast<std::uint32_t>(gen() % 6);
    }
    v.back() = static_cast<std::uint32_t>(gen() % 3);
    const auto poly = newton_polygon(v);
    std::vector<std::size_t> got;
    for (const auto& vert : poly.vertices) got.push_back(vert.index);
    CHECK(got == brute_force_vertices(v));
    for (std::size_t k = 1; k < poly.segments.size(); ++k) CHECK(poly.segments[k - 1].slope < poly.segments[k].slope);
  }
}

TEST_CASE("shifted valuations match exact binomial expansion") {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); bits += 1 + bits / 5) {
      const auto f = LittlewoodSample::from_bits(bits, n);
      const auto exact = oracle::shift_by_one(oracle::to_int_poly(f.normalized()));
      const auto v = shifted_two_adic_valuations(f);
      for (std::size_t i = 0; i <= n; ++i) {
        const int e = oracle::v2(exact[i]);
        CHECK(v[i].has_value() == (e >= 0));
        if (e >= 0) CHECK(*v[i] == static_cast<std::uint32_t>(e));
      }
    }
  }
}

TEST_CASE("certificate index and the shape of the last hull edge") {
  for (std::size_t n : {3u, 7u, 15u}) {
    std::size_t valid = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
      const auto f = LittlewoodSample::from_bits(bits, n);
      const auto cert = littlewood_2adic_certificate(f);
      const auto v = shifted_two_adic_valuations(f);
      CHECK(*v[n] == 0);
      std::optional<std::size_t> first_one;
      for (std::size_t i = 0; i < n; ++i) {
        CHECK((!v[i] || *v[i] >= 1));
        if (v[i] && *v[i] == 1 && !first_one) first_one = i;
      }
      CHECK(cert.valid == first_one.has_value());
      if (!cert.valid) continue;
      ++valid;
      CHECK(cert.i_star == *first_one);
      CHECK(cert.lower_bound == n - cert.i_star);

      const auto poly = newton_polygon(v);
      const auto& last = poly.segments.back();
      // Every 2-adic factor along the last edge has degree divisible by the
      // reduced denominator of its slope.
      CHECK(static_cast<std::size_t>(last.slope.den) >= n - cert.i_star);
      if (2 * cert.i_star < n) {
        CHECK(last.width == n - cert.i_star);
        CHECK(last.height == 1);
      }
    }
    CHECK(valid > 0);
  }
  CHECK_FALSE(littlewood_2adic_certificate(LittlewoodSample::all_ones(4)).valid);
  CHECK(littlewood_2adic_certificate(LittlewoodSample::parse("++-+")).i_star == 0);
}
