#include "littlewood/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "littlewood/factorize.hpp"
#include "littlewood/parallel.hpp"
#include "poly_access.hpp"

namespace littlewood {
namespace {

using boost::multiprecision::cpp_int;

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

// index(r + sign * x) for every residue index r, digit-wise in base p.
std::vector<std::size_t> shifted_indices(std::span<const Residue> x, Residue p, std::size_t states,
                                         bool negate) {
  const std::size_t d = x.size();
  std::vector<std::size_t> out(states);
  for (std::size_t r = 0; r < states; ++r) {
    std::size_t rest = r, idx = 0, place = 1;
    for (std::size_t j = 0; j < d; ++j) {
      const Residue digit = static_cast<Residue>(rest % p);
      rest /= p;
      const Residue xj = negate ? (p - x[j]) % p : x[j];
      idx += ((digit + xj) % p) * place;
      place *= p;
    }
    out[r] = idx;
  }
  return out;
}

bool poly_less(const PolyMod& a, const PolyMod& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

}  // namespace

ResidueDistribution::ResidueDistribution(PolyMod modulus, std::size_t n, std::vector<std::uint64_t> counts)
    : modulus_(std::move(modulus)), n_(n), counts_(std::move(counts)) {}

Rational ResidueDistribution::probability(std::size_t residue_index) const {
  if (residue_index >= counts_.size()) throw std::out_of_range("residue index out of range");
  return Rational(cpp_int(counts_[residue_index]), cpp_int(total()));
}

Rational ResidueDistribution::probability(const PolyMod& residue) const {
  return probability(index_of(residue));
}

Rational ResidueDistribution::max_deviation() const {
  const cpp_int scale = cpp_int(total()) * counts_.size();
  cpp_int worst = 0;
  for (std::uint64_t c : counts_) {
    cpp_int dev = cpp_int(c) * counts_.size() - cpp_int(total());
    if (dev < 0) dev = -dev;
    worst = std::max(worst, dev);
  }
  return Rational(worst, scale);
}

PolyMod ResidueDistribution::residue(std::size_t index) const {
  if (index >= counts_.size()) throw std::out_of_range("residue index out of range");
  const Residue p = modulus_.modulus();
  std::vector<Residue> c(modulus_.size() - 1);
  for (auto& digit : c) {
    digit = static_cast<Residue>(index % p);
    index /= p;
  }
  return detail::PolyAccess::make(p, std::move(c));
}

std::size_t ResidueDistribution::index_of(const PolyMod& residue) const {
  const Residue p = modulus_.modulus();
  if (residue.modulus() != p) throw std::invalid_argument("residue has a different modulus");
  if (residue.size() >= modulus_.size()) throw std::invalid_argument("residue is not reduced");
  std::size_t idx = 0;
  for (std::size_t j = residue.size(); j-- > 0;) idx = idx * p + residue.coeff(j);
  return idx;
}

ResidueDistribution distribution_mod(const PolyMod& D, std::size_t n) {
  if (D.is_zero() || !D.is_monic()) throw std::invalid_argument("distribution modulus must be monic");
  if (D.coeff(0) == 0) throw std::invalid_argument("distribution modulus must not be divisible by X");
  if (n > kMaxDistributionDegree) throw std::invalid_argument("degree too large for exact counts");
  const Residue p = D.modulus();
  const std::size_t d = D.size() - 1;
  const std::size_t states = ipow(p, d);

  std::vector<std::uint64_t> counts(states, 0), next(states);
  counts[0] = 1;
  if (d == 0) {
    counts[0] = std::uint64_t{1} << (n + 1);
    return ResidueDistribution(D, n, std::move(counts));
  }

  // x = X^i mod D as a coefficient vector of length d.
  std::vector<Residue> x(d, 0);
  x[0] = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto plus = shifted_indices(x, p, states, false);
    const auto minus = shifted_indices(x, p, states, true);
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t r = 0; r < states; ++r) {
      if (counts[r] == 0) continue;
      next[plus[r]] += counts[r];
      next[minus[r]] += counts[r];
    }
    counts.swap(next);

    // x <- X * x mod D.
    const Residue top = x[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) x[j] = x[j - 1];
    x[0] = 0;
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = static_cast<Residue>((x[j] + static_cast<std::uint64_t>(p - top) * D.coeff(j)) % p);
    }
  }
  return ResidueDistribution(D, n, std::move(counts));
}

std::uint64_t default_delta_budget() {
  constexpr std::uint64_t kDefault = 1ULL << 24;
  if (const char* env = std::getenv("LITTLEWOOD_DELTA_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("LITTLEWOOD_DELTA_BUDGET is not a number");
    }
  }
  return kDefault;
}

DeltaReport delta_exact(Residue p, std::size_t n, std::size_t m, std::uint64_t budget, unsigned threads) {
  if (!is_small_prime(p)) throw std::invalid_argument("modulus must be a prime <= 65521");
  if (n > kMaxDistributionDegree) throw std::invalid_argument("degree too large for exact counts");

  // (m + 1) * p^m <= budget, without overflow.
  bool over = false;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < m && !over; ++i) {
    over = power > budget / p;
    power *= p;
  }
  if (over || (m + 1) > budget / power) {
    throw BudgetExceeded("(m+1)*p^m exceeds the budget of " + std::to_string(budget));
  }

  std::vector<PolyMod> divisors{PolyMod::one(p)};
  for (std::size_t d = 1; d <= m; ++d) {
    const std::size_t free = ipow(p, d - 1);
    for (Residue c0 = 1; c0 < p; ++c0) {
      for (std::size_t t = 0; t < free; ++t) {
        std::vector<Residue> c(d + 1);
        c[0] = c0;
        std::size_t rest = t;
        for (std::size_t j = 1; j < d; ++j) {
          c[j] = static_cast<Residue>(rest % p);
          rest /= p;
        }
        c[d] = 1;
        divisors.push_back(detail::PolyAccess::make(p, std::move(c)));
      }
    }
  }
  std::sort(divisors.begin(), divisors.end(), poly_less);

  std::vector<Rational> deviations(divisors.size());
  parallel_for(divisors.size(), threads,
               [&](std::size_t i) { deviations[i] = distribution_mod(divisors[i], n).max_deviation(); });

  DeltaReport out{p, n, m, {}, 0};
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    out.total += deviations[i];
    out.per_D.push_back({std::move(divisors[i]), std::move(deviations[i])});
  }
  return out;
}

void SmoothnessParams::validate() const {
  if (!(k >= 1.0) || !std::isfinite(k)) throw std::invalid_argument("k must be >= 1");
  if (!(theta > 0.0 && theta < theta_star())) throw std::invalid_argument("theta must lie in (0, theta*)");
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
}

std::size_t SmoothnessParams::m_first() const { return static_cast<std::size_t>(std::ceil(k)); }

std::size_t SmoothnessParams::m_last() const {
  const double nd = static_cast<double>(n);
  return static_cast<std::size_t>(std::floor(2.0 * theta * nd / std::log(nd)));
}

SmoothnessOutcome smoothness_event(const LittlewoodSample& f, const SmoothnessParams& params) {
  params.validate();
  const std::size_t first = params.m_first();
  const std::size_t last = params.m_last();
  if (first > last) return {true, std::nullopt};

  DegreeCensus census(reduce(f, 3));
  const double tau_exponent = (1.0 + params.eps) * std::log(2.0);
  for (std::size_t m = first; m <= last; ++m) {
    const auto part = census.smooth_part(m);
    const double md = static_cast<double>(m);
    const bool degree_ok = static_cast<double>(part.degree) <= params.eps * md * std::log(md);
    const cpp_int tau_cap(std::floor(std::pow(md, tau_exponent)));
    if (!degree_ok || part.tau > tau_cap) return {false, m};
  }
  return {true, std::nullopt};
}

}  // namespace littlewood
