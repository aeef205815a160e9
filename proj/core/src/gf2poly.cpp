#include "littlewood/gf2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "poly_access.hpp"

namespace littlewood {
namespace {

using Word = Gf2Poly::Word;
constexpr std::size_t kKaratsubaWords = 24;

// Spreads the low 32 bits of x into the even bit positions of a word.
constexpr Word spread32(Word x) noexcept {
  x &= 0xffffffffULL;
  x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
  x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x << 2)) & 0x3333333333333333ULL;
  x = (x | (x << 1)) & 0x5555555555555555ULL;
  return x;
}

// Inverse of spread32: gathers the even bits of x into the low 32 bits.
constexpr Word gather32(Word x) noexcept {
  x &= 0x5555555555555555ULL;
  x = (x | (x >> 1)) & 0x3333333333333333ULL;
  x = (x | (x >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x >> 4)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x >> 8)) & 0x0000ffff0000ffffULL;
  x = (x | (x >> 16)) & 0x00000000ffffffffULL;
  return x;
}

void mul_schoolbook(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto [lo, hi] = clmul64(a[i], b[j]);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
}

// out (size >= |a| + |b|) ^= a * b.
void mul_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  if (a.empty() || b.empty()) return;
  if (a.size() < kKaratsubaWords || b.size() < kKaratsubaWords) {
    mul_schoolbook(a, b, out);
    return;
  }
  const std::size_t h = std::max(a.size(), b.size()) / 2;
  if (a.size() <= h || b.size() <= h) {
    // Unbalanced: split only the longer operand.
    auto& longer = a.size() > b.size() ? a : b;
    auto& shorter = a.size() > b.size() ? b : a;
    mul_words(shorter, longer.subspan(0, h), out);
    mul_words(shorter, longer.subspan(h), out.subspan(h));
    return;
  }
  const auto a0 = a.subspan(0, h), a1 = a.subspan(h);
  const auto b0 = b.subspan(0, h), b1 = b.subspan(h);

  std::vector<Word> z0(2 * h, 0);
  std::vector<Word> z2(a1.size() + b1.size(), 0);
  mul_words(a0, b0, z0);
  mul_words(a1, b1, z2);

  std::vector<Word> as(std::max(a0.size(), a1.size()), 0);
  std::vector<Word> bs(std::max(b0.size(), b1.size()), 0);
  for (std::size_t i = 0; i < a0.size(); ++i) as[i] ^= a0[i];
  for (std::size_t i = 0; i < a1.size(); ++i) as[i] ^= a1[i];
  for (std::size_t i = 0; i < b0.size(); ++i) bs[i] ^= b0[i];
  for (std::size_t i = 0; i < b1.size(); ++i) bs[i] ^= b1[i];
  std::vector<Word> z1(as.size() + bs.size(), 0);
  mul_words(as, bs, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] ^= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] ^= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] ^= z0[i];
  for (std::size_t i = 0; i < z1.size() && h + i < out.size(); ++i) out[h + i] ^= z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] ^= z2[i];
}

// r ^= b * X^shift, r large enough.
void xor_shifted(std::vector<Word>& r, std::span<const Word> b, std::size_t shift) {
  const std::size_t ws = shift / Gf2Poly::kWordBits;
  const unsigned bs = shift % Gf2Poly::kWordBits;
  if (bs == 0) {
    for (std::size_t j = 0; j < b.size(); ++j) r[j + ws] ^= b[j];
    return;
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    r[j + ws] ^= b[j] << bs;
    if (j + ws + 1 < r.size()) r[j + ws + 1] ^= b[j] >> (Gf2Poly::kWordBits - bs);
  }
}

std::size_t top_bit(std::span<const Word> w) noexcept {
  return (w.size() - 1) * Gf2Poly::kWordBits + (63 - std::countl_zero(w.back()));
}

}  // namespace

Clmul128 clmul64(std::uint64_t a, std::uint64_t b) noexcept {
  // 4-bit windowed table of b * k for k < 16, kept as 128-bit values.
  std::array<Word, 16> lo{}, hi{};
  for (unsigned k = 1; k < 16; ++k) {
    for (unsigned bit = 0; bit < 4; ++bit) {
      if ((k >> bit) & 1) {
        lo[k] ^= b << bit;
        hi[k] ^= bit ? b >> (64 - bit) : 0;
      }
    }
  }
  Word rlo = 0, rhi = 0;
  for (unsigned i = 0; i < 64; i += 4) {
    const unsigned k = (a >> i) & 15;
    rlo ^= lo[k] << i;
    rhi ^= i ? (hi[k] << i) | (lo[k] >> (64 - i)) : hi[k];
  }
  return {rlo, rhi};
}

struct Gf2Access {
  static Gf2Poly make(std::vector<Word> w) noexcept {
    Gf2Poly out;
    out.words_ = std::move(w);
    out.trim();
    return out;
  }
};

Gf2Poly::Gf2Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }

void Gf2Poly::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::from_poly(const PolyMod& f) {
  if (f.modulus() != 2) throw std::invalid_argument("Gf2Poly requires modulus 2");
  std::vector<Word> w((f.size() + kWordBits - 1) / kWordBits, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.coeff(i)) w[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  return Gf2Access::make(std::move(w));
}

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
  std::vector<Word> w(degree / kWordBits + 1, 0);
  w.back() = Word{1} << (degree % kWordBits);
  return Gf2Access::make(std::move(w));
}

PolyMod Gf2Poly::to_poly() const {
  std::vector<Residue> c;
  if (!is_zero()) {
    c.resize(top_bit(words_) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) ? 1 : 0;
  }
  return detail::PolyAccess::make(2, std::move(c));
}

Degree Gf2Poly::degree() const noexcept {
  return is_zero() ? Degree::minus_infinity() : Degree(top_bit(words_));
}

Gf2Poly Gf2Poly::derivative() const {
  std::vector<Word> w(words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word shifted = words_[i] >> 1;
    if (i + 1 < words_.size()) shifted |= words_[i + 1] << 63;
    w[i] = shifted & 0x5555555555555555ULL;
  }
  return Gf2Access::make(std::move(w));
}

Gf2Poly Gf2Poly::square() const {
  std::vector<Word> w(2 * words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    w[2 * i] = spread32(words_[i]);
    w[2 * i + 1] = spread32(words_[i] >> 32);
  }
  return Gf2Access::make(std::move(w));
}

Gf2Poly Gf2Poly::sqrt_of_square() const {
  std::vector<Word> w((words_.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word half = gather32(words_[i]);
    w[i / 2] |= (i % 2 == 0) ? half : half << 32;
  }
  return Gf2Access::make(std::move(w));
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
  if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word> out(a.words_.size() + b.words_.size(), 0);
  mul_words(a.words_, b.words_, out);
  return Gf2Access::make(std::move(out));
}

Gf2DivRem divrem(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto bw = b.words();
  const std::size_t db = top_bit(bw);
  std::size_t da = top_bit(a.words());
  if (da < db) return {Gf2Poly{}, a};

  std::vector<Word> r(a.words().begin(), a.words().end());
  std::vector<Word> q((da - db) / Gf2Poly::kWordBits + 1, 0);
  for (std::size_t i = da + 1; i-- > db;) {
    if ((r[i / 64] >> (i % 64)) & 1) {
      const std::size_t s = i - db;
      q[s / 64] |= Word{1} << (s % 64);
      xor_shifted(r, bw, s);
    }
  }
  return {Gf2Access::make(std::move(q)), Gf2Access::make(std::move(r))};
}

Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return divrem(a, b).quotient; }

Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto bw = b.words();
  const std::size_t db = top_bit(bw);
  const std::size_t da = top_bit(a.words());
  if (da < db) return a;
  std::vector<Word> r(a.words().begin(), a.words().end());
  for (std::size_t i = da + 1; i-- > db;) {
    if ((r[i / 64] >> (i % 64)) & 1) xor_shifted(r, bw, i - db);
  }
  return Gf2Access::make(std::move(r));
}

Gf2Poly gcd(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Gf2Poly x = a;
  Gf2Poly y = b;
  while (!y.is_zero()) {
    Gf2Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Gf2ModulusContext::Gf2ModulusContext(Gf2Poly modulus) : modulus_(std::move(modulus)), degree_(0) {
  if (modulus_.is_constant()) throw std::invalid_argument("reduction modulus must be nonconstant");
  degree_ = modulus_.degree().value();
}

Gf2Poly Gf2ModulusContext::reduce(const Gf2Poly& a) const { return a % modulus_; }

Gf2Poly powmod(const Gf2Poly& base, std::uint64_t e, const Gf2ModulusContext& ctx) {
  Gf2Poly result = ctx.reduce(Gf2Poly::one());
  Gf2Poly b = ctx.reduce(base);
  while (e) {
    if (e & 1) result = ctx.mulmod(result, b);
    e >>= 1;
    if (e) b = ctx.sqrmod(b);
  }
  return result;
}

}  // namespace littlewood
