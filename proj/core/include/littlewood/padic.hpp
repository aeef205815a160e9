#pragma once

// 2-adic Newton polygons and the large-factor certificate for Littlewood
// polynomials of degree 2^r - 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "littlewood/polyring.hpp"

namespace littlewood {

/// Valuation of a coefficient; std::nullopt stands for +infinity (a zero
/// coefficient).
using Valuation = std::optional<std::uint32_t>;

/// Reduced rational with positive denominator.
struct Slope {
  std::int64_t num;
  std::int64_t den;

  static Slope make(std::int64_t num, std::int64_t den);
  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) noexcept {
    return a.num * b.den <=> b.num * a.den;
  }
};

struct HullVertex {
  std::size_t index;
  std::uint32_t valuation;
  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

/// One edge of the lower hull.  height = v(start) - v(end), so a falling
/// edge has positive height; slope = -height / width.
struct Segment {
  std::size_t width;
  std::int64_t height;
  Slope slope;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct NewtonPolygon {
  std::vector<Valuation> points;  // points[i] = valuation of coefficient i
  std::vector<HullVertex> vertices;
  std::vector<Segment> segments;
};

/// Lower convex hull of the finite points (i, v_i).  The last valuation must
/// be finite; throws std::invalid_argument on empty or all-infinite input.
NewtonPolygon newton_polygon(std::span<const Valuation> valuations);

/// From the smallest i with g_i = 2 (mod 4), where g(X) = f(X+1) and f is
/// the monic representative: every factorization of f over Z has a factor
/// of degree >= lower_bound = n - i_star.
struct LargeFactorCertificate {
  std::size_t i_star = 0;
  std::size_t lower_bound = 0;
  bool valid = false;
};

/// Invalid (not an error) when n + 1 is not a power of two or no
/// coefficient of g below the leading one is 2 mod 4.
LargeFactorCertificate littlewood_2adic_certificate(const LittlewoodSample& f);

/// Exact 2-adic valuations of the coefficients of f(X+1), by big-integer
/// composition of the monic representative.
std::vector<Valuation> shifted_two_adic_valuations(const LittlewoodSample& f);

constexpr bool is_power_of_two(std::uint64_t x) noexcept { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace littlewood
