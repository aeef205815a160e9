#pragma once

// Irreducibility certificates for Littlewood polynomials, built by
// intersecting the admissible degrees of a proper factor obtained from
// factorizations modulo small primes and from the 2-adic certificate.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "littlewood/padic.hpp"
#include "littlewood/polyring.hpp"
#include "littlewood/rng.hpp"

namespace littlewood {

/// Degrees k in {0..n} that one side of a factorization f = g h over Z could
/// have.  Always contains 0 and n and is closed under k -> n - k.
class DegreeConstraint {
 public:
  /// No information: every degree allowed.
  static DegreeConstraint full(std::size_t n);
  /// Subset sums of a multiset of factor degrees summing to n.
  static DegreeConstraint from_subset_sums(std::size_t n, std::span<const std::size_t> degrees);
  /// [0, low] U [n - low, n].
  static DegreeConstraint from_outer_intervals(std::size_t n, std::size_t low);

  std::size_t n() const noexcept { return n_; }
  bool allows(std::size_t k) const noexcept { return k <= n_ && allowed_.test(k); }
  std::size_t count() const noexcept { return allowed_.count(); }
  /// Only the trivial splits {0, n} remain.
  bool is_trivial() const noexcept { return count() == (n_ == 0 ? 1 : 2); }
  std::vector<std::size_t> values() const;

  friend bool operator==(const DegreeConstraint&, const DegreeConstraint&) = default;

 private:
  DegreeConstraint(std::size_t n, boost::dynamic_bitset<> allowed);
  std::size_t n_;
  boost::dynamic_bitset<> allowed_;

  friend DegreeConstraint intersect(const DegreeConstraint& a, const DegreeConstraint& b);
};

/// Set intersection; throws std::invalid_argument when the degrees differ.
DegreeConstraint intersect(const DegreeConstraint& a, const DegreeConstraint& b);

/// Subset sums of the irreducible factor degrees of f mod q.
DegreeConstraint constraint_from_modular(const LittlewoodSample& f, Residue q, CounterRng& rng);

/// [0, i*] U [n - i*, n].  Throws std::invalid_argument for an invalid certificate.
DegreeConstraint constraint_from_2adic(const LargeFactorCertificate& cert, std::size_t n);

enum class Verdict { CertifiedIrreducible, Unknown };
const char* to_string(Verdict v) noexcept;

struct TraceEntry {
  std::string source;  // "2-adic" or "mod q"
  std::size_t before;  // allowed-set sizes around the intersection
  std::size_t after;
};

struct CertificateOutcome {
  Verdict verdict;
  std::vector<TraceEntry> trace;
  DegreeConstraint constraint;
};

/// Folds the 2-adic certificate (when requested and applicable) and then
/// each prime in order, stopping as soon as only {0, n} is left.  Unknown
/// is not a claim of reducibility.  Requires degree >= 1 and at least one
/// source.
CertificateOutcome certify(const LittlewoodSample& f, std::span<const Residue> primes,
                           bool use_2adic, CounterRng& rng);

}  // namespace littlewood
