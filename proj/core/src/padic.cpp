#include "littlewood/padic.hpp"

#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace littlewood {

Slope Slope::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("slope with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

NewtonPolygon newton_polygon(std::span<const Valuation> valuations) {
  if (valuations.empty()) throw std::invalid_argument("Newton polygon of an empty sequence");
  if (!valuations.back()) {
    throw std::invalid_argument("Newton polygon needs a finite last valuation");
  }
  NewtonPolygon poly{{valuations.begin(), valuations.end()}, {}, {}};

  auto& hull = poly.vertices;
  for (std::size_t i = 0; i < valuations.size(); ++i) {
    if (!valuations[i]) continue;
    const HullVertex p{i, *valuations[i]};
    // Pop while the last two hull points and p make a non-left turn.
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const auto dx1 = static_cast<std::int64_t>(a.index - o.index);
      const auto dy1 = static_cast<std::int64_t>(a.valuation) - o.valuation;
      const auto dx2 = static_cast<std::int64_t>(p.index - o.index);
      const auto dy2 = static_cast<std::int64_t>(p.valuation) - o.valuation;
      if (dx1 * dy2 - dy1 * dx2 > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const std::size_t width = hull[k].index - hull[k - 1].index;
    const std::int64_t height =
        static_cast<std::int64_t>(hull[k - 1].valuation) - static_cast<std::int64_t>(hull[k].valuation);
    poly.segments.push_back({width, height, Slope::make(-height, static_cast<std::int64_t>(width))});
  }
  return poly;
}

LargeFactorCertificate littlewood_2adic_certificate(const LittlewoodSample& f) {
  const std::size_t n = f.degree();
  if (!is_power_of_two(n + 1)) return {};
  const PolyMod4 g = shift_compose_mod4(f.normalized());
  // (X - 1) f = (X - 1)^(n+1) mod 2, so g = X^n mod 2 and every g_i (i < n) is even.
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i] == 2) return {i, n - i, true};
    if (g[i] != 0) throw std::logic_error("shifted Littlewood polynomial has an odd coefficient");
  }
  return {};
}

std::vector<Valuation> shifted_two_adic_valuations(const LittlewoodSample& f) {
  using boost::multiprecision::cpp_int;
  const auto monic = f.normalized();
  const auto signs = monic.signs();
  const std::size_t n = monic.degree();
  std::vector<cpp_int> g(n + 1);
  for (std::size_t step = 0; step <= n; ++step) {
    for (std::size_t j = step; j >= 1; --j) g[j] += g[j - 1];
    g[0] += signs[n - step];
  }
  std::vector<Valuation> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (!g[i].is_zero()) out[i] = static_cast<std::uint32_t>(boost::multiprecision::lsb(abs(g[i])));
  }
  return out;
}

}  // namespace littlewood
