#pragma once

// Fourier transform of the uniform +-1 measure, mu_hat(a) = cos(2 pi a),
// the numerical bound on sums of |mu_hat|^s over cosets, and the exponent
// constants gamma(s) and theta*.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace littlewood {

/// cos(2 pi alpha), folded into [0, pi/4] before calling cos or sin.
double mu_hat(double alpha) noexcept;
/// cos(2 pi num / den) with the argument reduced exactly; den > 0.
double mu_hat(std::int64_t num, std::int64_t den);

/// sum_{k < Q} |cos(2 pi (k/Q + l/R))|^s with each argument reduced as the
/// rational (kR + lQ) / (QR).  Requires Q >= 2, R >= 1, l < R, s >= 1.
double fourier_case_sum(std::uint64_t Q, std::uint64_t R, std::uint64_t l, std::uint64_t s);

/// Upper bound on the absolute rounding error of fourier_case_sum:
/// Q (4s + Q + 4) 2^-53.
double fourier_case_margin(std::uint64_t Q, std::uint64_t s) noexcept;

struct FourierCheckParams {
  std::uint64_t P;
  std::uint64_t s;
  double gamma;
  double slack = 0.9999;

  /// P >= 3 square-free with only odd prime factors, s >= 1, 0 < gamma < 1,
  /// slack > 0.
  void validate() const;
};

struct FourierRow {
  std::uint64_t Q;
  std::uint64_t R;
  std::uint64_t l;
  double sum;
  double bound;   // slack * Q^(1 - gamma)
  double margin;  // rounding error bound on sum
  bool pass;      // sum + margin <= bound
};

struct FourierCheckReport {
  FourierCheckParams params;
  std::vector<FourierRow> rows;  // by Q, then l
  std::size_t cases;             // number of factorizations QR = P with Q > 1
  double worst_ratio;            // max sum / bound
  bool all_pass;
};

FourierCheckReport verify_fourier_bound(const FourierCheckParams& params, unsigned threads = 1);

/// 1 - log(1 + 2^(1-s)) / log 3.
double gamma_of_s(std::uint64_t s);
/// log 2 / (2 log 3).
double theta_star() noexcept;
/// Least s >= 1 with gamma_of_s(s) > x; requires x < 1.
std::uint64_t smallest_s_with_gamma_above(double x);

}  // namespace littlewood
