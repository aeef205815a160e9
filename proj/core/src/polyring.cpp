#include "littlewood/polyring.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "modarith.hpp"
#include "ntt.hpp"
#include "poly_access.hpp"

namespace littlewood {
namespace {

constexpr std::size_t kSchoolbookCutoff = 48;
constexpr std::size_t kFastReductionDegree = 128;

void check_modulus(Residue p) {
  if (p < 2 || p > kMaxModulus || !is_small_prime(p)) {
    throw std::invalid_argument("modulus must be a prime in [2, " + std::to_string(kMaxModulus) +
                                "], got " + std::to_string(p));
  }
}

void check_same_modulus(const PolyMod& a, const PolyMod& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
  }
}

Residue mulmod(Residue a, Residue b, Residue p) noexcept {
  return static_cast<Residue>(std::uint64_t{a} * b % p);
}

std::vector<Residue> schoolbook(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  // Each accumulator receives at most min(|a|, |b|) products below 2^32.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    std::uint64_t* row = acc.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
  }
  std::vector<Residue> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Residue>(acc[i] % p);
  return out;
}

// Power-series inverse of h (h[0] != 0) to `precision` terms.
std::vector<Residue> series_inverse(std::span<const Residue> h, std::size_t precision, Residue p) {
  std::vector<Residue> g{inverse_mod(h[0], p)};
  std::size_t k = 1;
  while (k < precision) {
    const std::size_t k2 = std::min(2 * k, precision);
    auto t = convolve(h.subspan(0, std::min(k2, h.size())), g, p);
    t.resize(k2, 0);
    for (auto& x : t) x = x == 0 ? 0 : p - x;
    t[0] = (t[0] + 2) % p;
    g = convolve(g, t, p);
    g.resize(k2, 0);
    k = k2;
  }
  g.resize(precision, 0);
  return g;
}

}  // namespace

bool is_small_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t Degree::value() const {
  if (is_minus_infinity()) throw std::domain_error("degree of the zero polynomial");
  return static_cast<std::size_t>(value_);
}

std::string to_string(Degree d) {
  return d.is_minus_infinity() ? std::string("-inf") : std::to_string(d.value());
}

Residue inverse_mod(Residue a, Residue p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("residue is not invertible");
  if (t < 0) t += p;
  return static_cast<Residue>(t);
}

std::vector<Residue> convolve(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kSchoolbookCutoff ||
      !detail::ntt_convolution_is_exact(a.size(), b.size(), p)) {
    return schoolbook(a, b, p);
  }
  return detail::ntt_convolve(a, b, p);
}

// ---------------------------------------------------------------------------
// PolyMod

PolyMod::PolyMod(Residue modulus) : modulus_(modulus) { check_modulus(modulus); }

PolyMod::PolyMod(Residue modulus, std::vector<Residue> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  check_modulus(modulus);
  for (auto& c : coeffs_) c %= modulus_;
  trim();
}

PolyMod::PolyMod(Unchecked, Residue modulus, std::vector<Residue> coeffs) noexcept
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  trim();
}

void PolyMod::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyMod PolyMod::from_integers(Residue modulus, std::span<const std::int64_t> coeffs) {
  check_modulus(modulus);
  std::vector<Residue> out(coeffs.size());
  const auto p = static_cast<std::int64_t>(modulus);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out[i] = static_cast<Residue>(((coeffs[i] % p) + p) % p);
  }
  return detail::PolyAccess::make(modulus, std::move(out));
}

PolyMod PolyMod::constant(Residue modulus, Residue c) { return PolyMod(modulus, {c}); }

PolyMod PolyMod::monomial(Residue modulus, std::size_t degree, Residue c) {
  check_modulus(modulus);
  std::vector<Residue> out(degree + 1, 0);
  out[degree] = c % modulus;
  return detail::PolyAccess::make(modulus, std::move(out));
}

Residue PolyMod::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

PolyMod PolyMod::monic() const {
  if (is_zero() || coeffs_.back() == 1) return *this;
  return scaled(inverse_mod(coeffs_.back(), modulus_));
}

PolyMod PolyMod::derivative() const {
  std::vector<Residue> out;
  if (coeffs_.size() > 1) {
    out.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = mulmod(coeffs_[i], static_cast<Residue>(i % modulus_), modulus_);
    }
  }
  return PolyMod(Unchecked{}, modulus_, std::move(out));
}

PolyMod PolyMod::scaled(Residue c) const {
  c %= modulus_;
  std::vector<Residue> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = mulmod(coeffs_[i], c, modulus_);
  return PolyMod(Unchecked{}, modulus_, std::move(out));
}

Residue PolyMod::evaluate(Residue x) const noexcept {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = static_cast<Residue>((std::uint64_t{acc} * x + *it) % modulus_);
  }
  return acc;
}

PolyMod& PolyMod::operator+=(const PolyMod& rhs) {
  check_same_modulus(*this, rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    const Residue s = coeffs_[i] + rhs.coeffs_[i];
    coeffs_[i] = s >= modulus_ ? s - modulus_ : s;
  }
  trim();
  return *this;
}

PolyMod& PolyMod::operator-=(const PolyMod& rhs) {
  check_same_modulus(*this, rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    const Residue a = coeffs_[i];
    const Residue b = rhs.coeffs_[i];
    coeffs_[i] = a >= b ? a - b : a + modulus_ - b;
  }
  trim();
  return *this;
}

PolyMod& PolyMod::operator*=(const PolyMod& rhs) { return *this = *this * rhs; }

PolyMod operator*(const PolyMod& a, const PolyMod& b) {
  check_same_modulus(a, b);
  return PolyMod(PolyMod::Unchecked{}, a.modulus_, convolve(a.coeffs_, b.coeffs_, a.modulus_));
}

PolyMod operator-(const PolyMod& a) {
  std::vector<Residue> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeffs_[i] == 0 ? 0 : a.modulus_ - a.coeffs_[i];
  }
  return PolyMod(PolyMod::Unchecked{}, a.modulus_, std::move(out));
}

// ---------------------------------------------------------------------------
// Division and gcd

DivRem divrem(const PolyMod& a, const PolyMod& b) {
  check_same_modulus(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Residue p = a.modulus();
  if (a.size() < b.size()) return {PolyMod(p), a};

  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Residue lead_inv = inverse_mod(bc.back(), p);
  const detail::FastMod fm(p);
  std::vector<Residue> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Residue> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const Residue c = mulmod(r[i], lead_inv, p);
    if (c == 0) continue;
    q[i - db] = c;
    const Residue neg = p - c;
    Residue* row = r.data() + (i - db);
    for (std::size_t j = 0; j <= db; ++j) {
      // row[j] + neg * bc[j] <= p(p - 1) < 2^32
      row[j] = fm(row[j] + neg * bc[j]);
    }
  }
  r.resize(db);
  return {detail::PolyAccess::make(p, std::move(q)), detail::PolyAccess::make(p, std::move(r))};
}

PolyMod operator/(const PolyMod& a, const PolyMod& b) { return divrem(a, b).quotient; }
PolyMod operator%(const PolyMod& a, const PolyMod& b) { return divrem(a, b).remainder; }

PolyMod gcd(const PolyMod& a, const PolyMod& b) {
  check_same_modulus(a, b);
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  PolyMod x = a;
  PolyMod y = b;
  while (!y.is_zero()) {
    PolyMod r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// ModulusContext

ModulusContext::ModulusContext(PolyMod modulus) : modulus_(std::move(modulus)), degree_(0) {
  if (modulus_.is_constant()) {
    throw std::invalid_argument("reduction modulus must be nonconstant");
  }
  degree_ = modulus_.degree().value();
  if (degree_ >= kFastReductionDegree) {
    const auto c = modulus_.coeffs();
    std::vector<Residue> reversed(c.rbegin(), c.rend());
    reversed_inverse_ = series_inverse(reversed, degree_ - 1, modulus_.modulus());
  }
}

PolyMod ModulusContext::reduce(const PolyMod& a) const {
  check_same_modulus(a, modulus_);
  if (a.size() <= degree_) return a;
  if (reversed_inverse_.empty() || a.size() > 2 * degree_ - 1) return divrem(a, modulus_).remainder;

  const Residue p = modulus_.modulus();
  const auto ac = a.coeffs();
  const std::size_t qlen = ac.size() - degree_;
  std::vector<Residue> head(qlen);
  for (std::size_t i = 0; i < qlen; ++i) head[i] = ac[ac.size() - 1 - i];
  auto q_rev = convolve(head, std::span<const Residue>(reversed_inverse_).subspan(0, qlen), p);
  q_rev.resize(qlen);
  std::reverse(q_rev.begin(), q_rev.end());
  auto qf = convolve(q_rev, modulus_.coeffs(), p);
  std::vector<Residue> r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    const Residue x = ac[i];
    const Residue y = i < qf.size() ? qf[i] : 0;
    r[i] = x >= y ? x - y : x + p - y;
  }
  return detail::PolyAccess::make(p, std::move(r));
}

PolyMod ModulusContext::mulmod(const PolyMod& a, const PolyMod& b) const {
  return reduce(reduce(a) * reduce(b));
}

PolyMod powmod(const PolyMod& base, std::uint64_t e, const ModulusContext& ctx) {
  PolyMod result = ctx.reduce(PolyMod::one(base.modulus()));
  PolyMod b = ctx.reduce(base);
  while (e) {
    if (e & 1) result = ctx.mulmod(result, b);
    e >>= 1;
    if (e) b = ctx.sqrmod(b);
  }
  return result;
}

PolyMod powmod(const PolyMod& base, std::uint64_t e, const PolyMod& m) {
  return powmod(base, e, ModulusContext(m));
}

// ---------------------------------------------------------------------------
// Littlewood samples

LittlewoodSample::LittlewoodSample(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw std::invalid_argument("a Littlewood sample needs at least one sign");
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("Littlewood coefficients must be +1 or -1");
  }
}

LittlewoodSample LittlewoodSample::parse(std::string_view pattern) {
  std::vector<std::int8_t> signs;
  signs.reserve(pattern.size());
  for (char c : pattern) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else {
      throw std::invalid_argument("sign pattern may contain only '+' and '-'");
    }
  }
  return LittlewoodSample(std::move(signs));
}

LittlewoodSample LittlewoodSample::all_ones(std::size_t n) {
  return LittlewoodSample(std::vector<std::int8_t>(n + 1, 1));
}

LittlewoodSample LittlewoodSample::from_bits(std::uint64_t bits, std::size_t n) {
  if (n >= 64) throw std::invalid_argument("from_bits supports degree below 64");
  std::vector<std::int8_t> signs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) signs[i] = (bits >> i) & 1 ? -1 : 1;
  return LittlewoodSample(std::move(signs));
}

LittlewoodSample LittlewoodSample::negated() const {
  auto out = signs_;
  for (auto& s : out) s = static_cast<std::int8_t>(-s);
  return LittlewoodSample(std::move(out));
}

std::string LittlewoodSample::to_string() const {
  std::string out(signs_.size(), '+');
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] < 0) out[i] = '-';
  }
  return out;
}

PolyMod reduce(const LittlewoodSample& f, Residue p) {
  check_modulus(p);
  std::vector<Residue> out(f.signs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.signs()[i] > 0 ? 1 : p - 1;
  return detail::PolyAccess::make(p, std::move(out));
}

PolyMod4::PolyMod4(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c > 3) throw std::invalid_argument("mod-4 coefficient out of range");
  }
}

PolyMod4 shift_compose_mod4(const LittlewoodSample& f) {
  const auto signs = f.signs();
  const std::size_t n = f.degree();
  std::vector<std::uint8_t> g(n + 1, 0);
  // After processing coefficient i, g holds sum_{j >= i} f_j (X+1)^{j-i}
  // in its first n - i + 1 slots.
  for (std::size_t step = 0; step <= n; ++step) {
    const std::size_t i = n - step;
    for (std::size_t j = step; j >= 1; --j) g[j] = (g[j] + g[j - 1]) & 3;
    g[0] = (g[0] + (signs[i] > 0 ? 1 : 3)) & 3;
  }
  return PolyMod4(std::move(g));
}

PolyMod parse_poly(std::string_view text, Residue modulus) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.starts_with('+')) token.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad coefficient '" + std::string(token) + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return PolyMod::from_integers(modulus, values);
}

std::string format_poly(const PolyMod& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.coeff(i));
  }
  return out;
}

}  // namespace littlewood
