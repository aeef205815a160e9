#pragma once

// Dense univariate polynomials over small prime fields F_p, the mod-4
// residue polynomials used by the 2-adic certificate, and Littlewood
// (+1/-1 coefficient) sign vectors.
//
// Coefficients are stored lowest degree first.  PolyMod never stores
// trailing zeros, so the zero polynomial has an empty coefficient vector
// and degree Degree::minus_infinity().

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace littlewood {

using Residue = std::uint32_t;

// Largest supported prime modulus.
inline constexpr Residue kMaxModulus = 65521;

bool is_small_prime(std::uint64_t p) noexcept;

namespace detail {
struct PolyAccess;
}

/// Degree of a polynomial; the zero polynomial has degree minus infinity,
/// which orders below every finite degree.
class Degree {
 public:
  constexpr explicit Degree(std::size_t d) noexcept : value_(static_cast<std::int64_t>(d)) {}

  static constexpr Degree minus_infinity() noexcept { return Degree(kMinusInfinity, 0); }

  constexpr bool is_minus_infinity() const noexcept { return value_ == kMinusInfinity; }

  /// Finite degree; throws std::domain_error for minus infinity.
  std::size_t value() const;

  friend constexpr auto operator<=>(Degree, Degree) noexcept = default;
  friend constexpr bool operator==(Degree, Degree) noexcept = default;

  friend constexpr bool operator==(Degree d, std::size_t k) noexcept {
    return !d.is_minus_infinity() && d.value_ == static_cast<std::int64_t>(k);
  }
  friend constexpr auto operator<=>(Degree d, std::size_t k) noexcept {
    return d <=> Degree(k);
  }

 private:
  static constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t raw, int) noexcept : value_(raw) {}
  std::int64_t value_;
};

std::string to_string(Degree d);

/// Polynomial over F_p, p a prime not exceeding kMaxModulus.
class PolyMod {
 public:
  /// The zero polynomial over F_p.
  explicit PolyMod(Residue modulus);

  /// Coefficients are reduced mod p and trailing zeros dropped.
  PolyMod(Residue modulus, std::vector<Residue> coeffs);

  /// Signed integer coefficients, reduced into [0, p).
  static PolyMod from_integers(Residue modulus, std::span<const std::int64_t> coeffs);
  static PolyMod constant(Residue modulus, Residue c);
  static PolyMod one(Residue modulus) { return constant(modulus, 1); }
  static PolyMod monomial(Residue modulus, std::size_t degree, Residue c = 1);
  static PolyMod x(Residue modulus) { return monomial(modulus, 1); }

  Residue modulus() const noexcept { return modulus_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of X^i; zero beyond the degree.
  Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  /// Leading coefficient; throws std::domain_error on the zero polynomial.
  Residue leading() const;

  PolyMod monic() const;
  PolyMod derivative() const;
  PolyMod scaled(Residue c) const;
  /// Value at a point of F_p.
  Residue evaluate(Residue x) const noexcept;

  PolyMod& operator+=(const PolyMod& rhs);
  PolyMod& operator-=(const PolyMod& rhs);
  PolyMod& operator*=(const PolyMod& rhs);

  friend PolyMod operator+(PolyMod a, const PolyMod& b) { return a += b; }
  friend PolyMod operator-(PolyMod a, const PolyMod& b) { return a -= b; }
  friend PolyMod operator*(const PolyMod& a, const PolyMod& b);
  friend PolyMod operator-(const PolyMod& a);

  friend bool operator==(const PolyMod&, const PolyMod&) = default;

 private:
  struct Unchecked {};
  PolyMod(Unchecked, Residue modulus, std::vector<Residue> coeffs) noexcept;
  void trim() noexcept;

  Residue modulus_;
  std::vector<Residue> coeffs_;

  friend struct detail::PolyAccess;
};

struct DivRem {
  PolyMod quotient;
  PolyMod remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b.
/// Throws std::domain_error when b is zero, std::invalid_argument on a
/// modulus mismatch.
DivRem divrem(const PolyMod& a, const PolyMod& b);
PolyMod operator/(const PolyMod& a, const PolyMod& b);
PolyMod operator%(const PolyMod& a, const PolyMod& b);

/// Monic gcd.  gcd(a, 0) = monic(a); both zero is an error.
PolyMod gcd(const PolyMod& a, const PolyMod& b);

/// Reduction context for repeated multiplication modulo a fixed polynomial.
/// Large moduli use a precomputed power-series inverse so that each
/// reduction costs a few convolutions instead of a quadratic division.
class ModulusContext {
 public:
  explicit ModulusContext(PolyMod modulus);

  const PolyMod& modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return degree_; }

  PolyMod reduce(const PolyMod& a) const;
  PolyMod mulmod(const PolyMod& a, const PolyMod& b) const;
  PolyMod sqrmod(const PolyMod& a) const { return mulmod(a, a); }

 private:
  PolyMod modulus_;
  std::size_t degree_;
  // Inverse of the reversed modulus as a power series, truncated to
  // degree_ - 1 terms.  Empty when the schoolbook path is used.
  std::vector<Residue> reversed_inverse_;
};

/// base^e mod m by binary exponentiation.  m must be nonconstant.
PolyMod powmod(const PolyMod& base, std::uint64_t e, const PolyMod& m);
PolyMod powmod(const PolyMod& base, std::uint64_t e, const ModulusContext& ctx);

/// Exact convolution of residue vectors mod p (no trimming).
std::vector<Residue> convolve(std::span<const Residue> a, std::span<const Residue> b, Residue p);

Residue inverse_mod(Residue a, Residue p);

/// A degree-n polynomial with every coefficient +1 or -1.
class LittlewoodSample {
 public:
  /// Signs must be +1 or -1; signs[i] is the coefficient of X^i.
  explicit LittlewoodSample(std::vector<std::int8_t> signs);

  /// Parses a string over {+,-}, lowest degree first, e.g. "+-++".
  static LittlewoodSample parse(std::string_view pattern);
  /// The all-ones polynomial X^n + ... + 1.
  static LittlewoodSample all_ones(std::size_t n);
  /// Bit i of `bits` set means coefficient i is -1.
  static LittlewoodSample from_bits(std::uint64_t bits, std::size_t n);

  std::size_t degree() const noexcept { return signs_.size() - 1; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }
  std::int8_t leading_sign() const noexcept { return signs_.back(); }

  LittlewoodSample negated() const;
  /// Monic representative: negate when the leading sign is -1.
  LittlewoodSample normalized() const { return leading_sign() > 0 ? *this : negated(); }

  std::string to_string() const;

  friend bool operator==(const LittlewoodSample&, const LittlewoodSample&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

/// f mod p.  The leading coefficient is a unit, so the degree is kept.
PolyMod reduce(const LittlewoodSample& f, Residue p);

/// Residues mod 4, lowest degree first, with a fixed length (trailing zeros
/// retained so that index equals the power of X).
class PolyMod4 {
 public:
  explicit PolyMod4(std::vector<std::uint8_t> coeffs);

  std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return coeffs_[i]; }

  friend bool operator==(const PolyMod4&, const PolyMod4&) = default;

 private:
  std::vector<std::uint8_t> coeffs_;
};

/// g(X) = f(X + 1) with coefficients reduced mod 4, by Horner iteration in Z/4Z.
PolyMod4 shift_compose_mod4(const LittlewoodSample& f);

/// "1,2,1" -> 1 + 2X + X^2 over F_p.
PolyMod parse_poly(std::string_view text, Residue modulus);
std::string format_poly(const PolyMod& f);

}  // namespace littlewood
