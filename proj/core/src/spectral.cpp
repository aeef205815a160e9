#include "littlewood/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "littlewood/numtheory.hpp"
#include "littlewood/parallel.hpp"

namespace littlewood {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double mu_hat(double alpha) noexcept {
  double a = alpha - std::floor(alpha);
  if (a > 0.5) a = 1.0 - a;  // cos is even about 0 and 1
  if (a <= 0.125) return std::cos(kTwoPi * a);
  if (a <= 0.25) return std::sin(kTwoPi * (0.25 - a));
  if (a <= 0.375) return -std::sin(kTwoPi * (a - 0.25));
  return -std::cos(kTwoPi * (0.5 - a));
}

double mu_hat(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("mu_hat: denominator must be positive");
  std::int64_t a = num % den;
  if (a < 0) a += den;
  if (2 * a > den) a = den - a;
  // Now 0 <= a/den <= 1/2; fold into an angle of at most pi/4.
  const double d = static_cast<double>(den);
  if (8 * a <= den) return std::cos(kTwoPi * (static_cast<double>(a) / d));
  if (4 * a <= den) return std::sin(kTwoPi * (static_cast<double>(den - 4 * a) / (4.0 * d)));
  if (8 * a <= 3 * den) return -std::sin(kTwoPi * (static_cast<double>(4 * a - den) / (4.0 * d)));
  return -std::cos(kTwoPi * (static_cast<double>(den - 2 * a) / (2.0 * d)));
}

double fourier_case_sum(std::uint64_t Q, std::uint64_t R, std::uint64_t l, std::uint64_t s) {
  if (Q < 2 || R < 1 || l >= R || s < 1) throw std::invalid_argument("fourier_case_sum: bad parameters");
  if (Q > (1ULL << 20) || R > (1ULL << 20)) throw std::invalid_argument("fourier_case_sum: Q, R too large");
  const auto den = static_cast<std::int64_t>(Q * R);
  std::vector<double> terms(Q);
  for (std::uint64_t k = 0; k < Q; ++k) {
    const auto num = static_cast<std::int64_t>((k * R + l * Q) % (Q * R));
    terms[k] = std::pow(std::fabs(mu_hat(num, den)), static_cast<double>(s));
  }
  // Summing in sorted order makes the result independent of how the coset
  // is enumerated, so l and R - l give bit-identical sums.
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

double fourier_case_margin(std::uint64_t Q, std::uint64_t s) noexcept {
  const double q = static_cast<double>(Q);
  return q * (4.0 * static_cast<double>(s) + q + 4.0) * std::ldexp(1.0, -53);
}

void FourierCheckParams::validate() const {
  if (P < 3) throw std::invalid_argument("P must be >= 3");
  for (const auto& [prime, e] : factor_integer(P)) {
    if (prime == 2 || e != 1) throw std::invalid_argument("P must be a square-free product of odd primes");
  }
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");
  if (!(slack > 0.0)) throw std::invalid_argument("slack must be positive");
}

FourierCheckReport verify_fourier_bound(const FourierCheckParams& params, unsigned threads) {
  params.validate();
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q <= params.P; ++q) {
    if (params.P % q == 0) qs.push_back(q);
  }

  FourierCheckReport out{params, {}, qs.size(), 0.0, true};
  for (std::uint64_t q : qs) {
    const std::uint64_t r = params.P / q;
    const double bound = params.slack * std::pow(static_cast<double>(q), 1.0 - params.gamma);
    const double margin = fourier_case_margin(q, params.s);
    for (std::uint64_t l = 0; l < r; ++l) out.rows.push_back({q, r, l, 0.0, bound, margin, false});
  }
  parallel_for(out.rows.size(), threads, [&](std::size_t i) {
    auto& row = out.rows[i];
    row.sum = fourier_case_sum(row.Q, row.R, row.l, params.s);
    row.pass = row.sum + row.margin <= row.bound;
  });
  for (const auto& row : out.rows) {
    out.worst_ratio = std::max(out.worst_ratio, row.sum / row.bound);
    out.all_pass = out.all_pass && row.pass;
  }
  return out;
}

double gamma_of_s(std::uint64_t s) {
  if (s < 1) throw std::invalid_argument("gamma_of_s needs s >= 1");
  return 1.0 - std::log1p(std::ldexp(1.0, 1 - static_cast<int>(std::min<std::uint64_t>(s, 2000)))) /
                   std::log(3.0);
}

double theta_star() noexcept { return std::log(2.0) / (2.0 * std::log(3.0)); }

std::uint64_t smallest_s_with_gamma_above(double x) {
  if (!(x < 1.0)) throw std::invalid_argument("gamma(s) < 1 for every s");
  std::uint64_t s = 1;
  while (!(gamma_of_s(s) > x)) ++s;
  return s;
}

}  // namespace littlewood
