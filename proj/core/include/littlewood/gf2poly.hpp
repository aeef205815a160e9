#pragma once

// Bit-packed polynomials over F_2: 64 coefficients per word, bit i of word w
// is the coefficient of X^(64w + i).  Same value semantics as PolyMod with
// modulus 2, used as the fast path for every characteristic-2 computation.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "littlewood/polyring.hpp"

namespace littlewood {

class Gf2Poly {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Poly() = default;
  explicit Gf2Poly(std::vector<Word> words);

  /// Requires modulus 2.
  static Gf2Poly from_poly(const PolyMod& f);
  static Gf2Poly one() { return Gf2Poly({Word{1}}); }
  static Gf2Poly x() { return monomial(1); }
  static Gf2Poly monomial(std::size_t degree);

  PolyMod to_poly() const;

  static constexpr Residue modulus() noexcept { return 2; }
  std::span<const Word> words() const noexcept { return words_; }
  Degree degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  bool is_constant() const noexcept { return is_zero() || is_one(); }
  bool coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kWordBits;
    return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1);
  }

  // Every nonzero polynomial over F_2 is monic.
  const Gf2Poly& monic() const noexcept { return *this; }
  Gf2Poly derivative() const;
  Gf2Poly square() const;
  /// Square root of a polynomial whose odd coefficients all vanish.
  Gf2Poly sqrt_of_square() const;

  Gf2Poly& operator+=(const Gf2Poly& rhs);
  Gf2Poly& operator-=(const Gf2Poly& rhs) { return *this += rhs; }

  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator-(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void trim() noexcept;
  std::vector<Word> words_;

  friend struct Gf2Access;
};

struct Gf2DivRem {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

Gf2DivRem divrem(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gcd(const Gf2Poly& a, const Gf2Poly& b);

class Gf2ModulusContext {
 public:
  explicit Gf2ModulusContext(Gf2Poly modulus);

  const Gf2Poly& modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return degree_; }

  Gf2Poly reduce(const Gf2Poly& a) const;
  Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b) const { return reduce(a * b); }
  Gf2Poly sqrmod(const Gf2Poly& a) const { return reduce(a.square()); }

 private:
  Gf2Poly modulus_;
  std::size_t degree_;
};

Gf2Poly powmod(const Gf2Poly& base, std::uint64_t e, const Gf2ModulusContext& ctx);

/// 64x64 -> 128 bit carry-less product, returned as {low, high}.
struct Clmul128 {
  std::uint64_t lo;
  std::uint64_t hi;
};
Clmul128 clmul64(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace littlewood
