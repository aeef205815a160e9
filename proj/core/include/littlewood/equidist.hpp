#pragma once

// Exact distribution of a random +-1 polynomial modulo a fixed D over F_p,
// the aggregate deficiency Delta_p(n; m), and the bounded-smoothness event
// for f mod 3.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "littlewood/polyring.hpp"
#include "littlewood/spectral.hpp"

namespace littlewood {

using Rational = boost::multiprecision::cpp_rational;

/// Counts of each residue class of sum_{i<=n} e_i X^i mod D over all 2^(n+1)
/// sign vectors.  Residue c_0 + c_1 X + ... is stored at index sum c_i p^i.
class ResidueDistribution {
 public:
  const PolyMod& modulus() const noexcept { return modulus_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return counts_.size(); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  /// 2^(n+1).
  std::uint64_t total() const noexcept { return std::uint64_t{1} << (n_ + 1); }

  Rational probability(std::size_t residue_index) const;
  Rational probability(const PolyMod& residue) const;
  /// max_C |P(C) - p^(-deg D)|.
  Rational max_deviation() const;

  /// Polynomial of the residue stored at `index`.
  PolyMod residue(std::size_t index) const;
  std::size_t index_of(const PolyMod& residue) const;

 private:
  ResidueDistribution(PolyMod modulus, std::size_t n, std::vector<std::uint64_t> counts);
  PolyMod modulus_;
  std::size_t n_;
  std::vector<std::uint64_t> counts_;

  friend ResidueDistribution distribution_mod(const PolyMod& D, std::size_t n);
};

/// Largest n for which counts fit in 64 bits.
inline constexpr std::size_t kMaxDistributionDegree = 62;

/// Requires D monic with nonzero constant term and n <= kMaxDistributionDegree.
ResidueDistribution distribution_mod(const PolyMod& D, std::size_t n);

struct DeltaTerm {
  PolyMod D;
  Rational deviation;
};

struct DeltaReport {
  Residue p;
  std::size_t n;
  std::size_t m;
  std::vector<DeltaTerm> per_D;  // degree, then coefficients high-first
  Rational total;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (m + 1) * p^m must not exceed this.  LITTLEWOOD_DELTA_BUDGET overrides
/// the built-in default.
std::uint64_t default_delta_budget();

/// Sum over monic D with X not dividing D and deg D <= m of the maximal
/// deviation from uniform.
DeltaReport delta_exact(Residue p, std::size_t n, std::size_t m, std::uint64_t budget,
                        unsigned threads = 1);
inline DeltaReport delta_exact(Residue p, std::size_t n, std::size_t m) {
  return delta_exact(p, n, m, default_delta_budget());
}

struct SmoothnessParams {
  double k;
  double theta;
  double eps;
  std::size_t n;

  /// Throws std::invalid_argument unless k >= 1, 0 < theta < theta*,
  /// 0 < eps < 1/2 and n >= 2.
  void validate() const;
  /// [ceil(k), floor(2 theta n / ln n)]; first > last when empty.
  std::size_t m_first() const;
  std::size_t m_last() const;
  bool empty_range() const { return m_first() > m_last(); }
};

struct SmoothnessOutcome {
  bool holds;
  std::optional<std::size_t> witness;  // first failing m
};

/// Checks deg(f_3^S(m)) <= eps m ln m and tau(f_3^S(m)) <= m^((1+eps) ln 2)
/// for every m in the range, in increasing order, stopping at the first
/// failure.  The factorization mod 3 is only carried as far as needed.
SmoothnessOutcome smoothness_event(const LittlewoodSample& f, const SmoothnessParams& params);

}  // namespace littlewood
