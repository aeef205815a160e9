#pragma once

// Factorization over F_p: squarefree decomposition, distinct-degree and
// equal-degree splitting (Cantor-Zassenhaus, trace map for p = 2), Rabin's
// irreducibility test, and the smooth-part statistics (degree of the
// m-smooth part and its number of monic divisors).
//
// Characteristic 2 inputs are routed through the bit-packed Gf2Poly type.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "littlewood/polyring.hpp"
#include "littlewood/rng.hpp"

namespace littlewood {

struct FactorPower {
  PolyMod factor;
  std::size_t multiplicity;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// f = unit * prod factor^multiplicity with distinct monic irreducible
/// factors, sorted by (degree, coefficients).
struct Factorization {
  Residue modulus;
  Residue unit;
  std::vector<FactorPower> factors;

  /// Multiplies the factorization back out.
  PolyMod expand() const;
  std::size_t degree() const noexcept;
};

/// Irreducible factor degrees with multiplicity, ascending.
using DegreeMultiset = std::vector<std::size_t>;
DegreeMultiset degree_multiset(const Factorization& fact);

struct SquarefreePart {
  PolyMod factor;  // monic, squarefree
  std::size_t multiplicity;
};

/// f = unit * prod part^multiplicity with pairwise coprime squarefree parts,
/// ascending multiplicity.  Handles p-th powers (f' = 0).  f must be nonzero.
std::vector<SquarefreePart> squarefree_decompose(const PolyMod& f);

struct DegreePart {
  PolyMod product;  // product of all irreducible factors of this degree
  std::size_t degree;
};

/// Splits a monic squarefree f into its distinct-degree parts, ascending.
/// Throws std::invalid_argument on a non-squarefree or constant input.
std::vector<DegreePart> distinct_degree_split(const PolyMod& f);

struct PartialDegreeSplit {
  std::vector<DegreePart> parts;  // all parts of degree <= searched_degree
  PolyMod remainder;              // every irreducible factor has degree > searched_degree
  std::size_t searched_degree;
};

/// Distinct-degree split that stops after degree `max_degree`.
PartialDegreeSplit distinct_degree_split(const PolyMod& f, std::size_t max_degree);

/// Splits f (monic, squarefree, all irreducible factors of degree d) into its
/// irreducible factors.  Randomized; deterministic for a given rng state.
std::vector<PolyMod> equal_degree_split(const PolyMod& f, std::size_t d, CounterRng& rng);

/// Complete factorization of a nonzero polynomial.
Factorization factor(const PolyMod& f, CounterRng& rng);

/// Rabin's test.  Throws std::invalid_argument on constant input.
bool is_irreducible(const PolyMod& f);

struct SmoothPart {
  std::size_t degree;                       // degree of the m-smooth part, with multiplicity
  boost::multiprecision::cpp_int tau;       // number of monic divisors of the m-smooth part
};

SmoothPart smooth_part(const Factorization& fact, std::size_t m);

/// Irreducible-factor counts by (degree, multiplicity), discovered lazily in
/// increasing degree.  Enough to evaluate smooth parts without equal-degree
/// splitting, and cheap when only small degrees matter.
class DegreeCensus {
 public:
  struct Entry {
    std::size_t degree;
    std::size_t multiplicity;
    std::size_t count;  // number of distinct irreducible factors
  };

  explicit DegreeCensus(const PolyMod& f);
  ~DegreeCensus();
  DegreeCensus(DegreeCensus&&) noexcept;
  DegreeCensus& operator=(DegreeCensus&&) noexcept;

  /// Makes every factor of degree <= bound visible in entries().
  void extend_to(std::size_t bound);
  std::size_t bound() const noexcept;
  /// True once every irreducible factor has been found.
  bool complete() const noexcept;
  const std::vector<Entry>& entries() const noexcept;

  /// Smooth part for m, extending the census as needed.
  SmoothPart smooth_part(std::size_t m);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace littlewood
