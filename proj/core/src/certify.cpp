#include "littlewood/certify.hpp"

#include <numeric>
#include <stdexcept>

#include "littlewood/factorize.hpp"

namespace littlewood {

DegreeConstraint::DegreeConstraint(std::size_t n, boost::dynamic_bitset<> allowed)
    : n_(n), allowed_(std::move(allowed)) {
  if (allowed_.size() != n_ + 1 || !allowed_.test(0) || !allowed_.test(n_)) {
    throw std::logic_error("degree constraint must contain 0 and n");
  }
}

DegreeConstraint DegreeConstraint::full(std::size_t n) {
  boost::dynamic_bitset<> bits(n + 1);
  bits.set();
  return DegreeConstraint(n, std::move(bits));
}

DegreeConstraint DegreeConstraint::from_subset_sums(std::size_t n, std::span<const std::size_t> degrees) {
  if (std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) != n) {
    throw std::invalid_argument("factor degrees must sum to n");
  }
  boost::dynamic_bitset<> bits(n + 1);
  bits.set(0);
  for (std::size_t d : degrees) bits |= bits << d;
  return DegreeConstraint(n, std::move(bits));
}

DegreeConstraint DegreeConstraint::from_outer_intervals(std::size_t n, std::size_t low) {
  boost::dynamic_bitset<> bits(n + 1);
  for (std::size_t k = 0; k <= std::min(low, n); ++k) {
    bits.set(k);
    bits.set(n - k);
  }
  return DegreeConstraint(n, std::move(bits));
}

std::vector<std::size_t> DegreeConstraint::values() const {
  std::vector<std::size_t> out;
  for (auto k = allowed_.find_first(); k != boost::dynamic_bitset<>::npos; k = allowed_.find_next(k)) {
    out.push_back(k);
  }
  return out;
}

DegreeConstraint intersect(const DegreeConstraint& a, const DegreeConstraint& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("intersecting constraints of different degree");
  return DegreeConstraint(a.n_, a.allowed_ & b.allowed_);
}

DegreeConstraint constraint_from_modular(const LittlewoodSample& f, Residue q, CounterRng& rng) {
  // The leading coefficient is +-1, so degrees survive reduction and any
  // integer factorization maps to a split of the factor multiset mod q.
  const auto fact = factor(reduce(f, q), rng);
  const auto degrees = degree_multiset(fact);
  return DegreeConstraint::from_subset_sums(f.degree(), degrees);
}

DegreeConstraint constraint_from_2adic(const LargeFactorCertificate& cert, std::size_t n) {
  if (!cert.valid) throw std::invalid_argument("2-adic certificate is not valid");
  if (cert.i_star >= n || cert.lower_bound != n - cert.i_star) {
    throw std::invalid_argument("2-adic certificate does not match degree");
  }
  return DegreeConstraint::from_outer_intervals(n, cert.i_star);
}

const char* to_string(Verdict v) noexcept {
  return v == Verdict::CertifiedIrreducible ? "CertifiedIrreducible" : "Unknown";
}

CertificateOutcome certify(const LittlewoodSample& f, std::span<const Residue> primes,
                           bool use_2adic, CounterRng& rng) {
  const std::size_t n = f.degree();
  if (n == 0) throw std::invalid_argument("certify needs degree >= 1");
  if (primes.empty() && !use_2adic) throw std::invalid_argument("certify needs at least one source");

  CertificateOutcome out{Verdict::Unknown, {}, DegreeConstraint::full(n)};
  auto apply = [&](std::string source, const DegreeConstraint& c) {
    const std::size_t before = out.constraint.count();
    out.constraint = intersect(out.constraint, c);
    out.trace.push_back({std::move(source), before, out.constraint.count()});
  };

  if (use_2adic) {
    const auto cert = littlewood_2adic_certificate(f);
    if (cert.valid) {
      apply("2-adic", constraint_from_2adic(cert, n));
    } else {
      out.trace.push_back({"2-adic", out.constraint.count(), out.constraint.count()});
    }
  }
  for (Residue q : primes) {
    if (out.constraint.is_trivial()) break;
    apply("mod " + std::to_string(q), constraint_from_modular(f, q, rng));
  }
  if (out.constraint.is_trivial()) out.verdict = Verdict::CertifiedIrreducible;
  return out;
}

}  // namespace littlewood
