#pragma once

// Factorization algorithms written once for both PolyMod and Gf2Poly.
// FieldOps<Poly> supplies the few representation-specific pieces.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "littlewood/gf2poly.hpp"
#include "littlewood/polyring.hpp"
#include "littlewood/rng.hpp"
#include "poly_access.hpp"

namespace littlewood::detail {

template <class Poly>
struct FieldOps;

template <>
struct FieldOps<PolyMod> {
  using Context = ModulusContext;

  static Residue characteristic(const PolyMod& like) { return like.modulus(); }
  static PolyMod one(const PolyMod& like) { return PolyMod::one(like.modulus()); }
  static PolyMod x(const PolyMod& like) { return PolyMod::x(like.modulus()); }

  static PolyMod frobenius(const PolyMod& a, const Context& ctx) {
    return powmod(a, a.modulus(), ctx);
  }

  // For f with f' = 0: every exponent is a multiple of p, and c^(1/p) = c in F_p.
  static PolyMod pth_root(const PolyMod& f) {
    const Residue p = f.modulus();
    std::vector<Residue> out(f.size() == 0 ? 0 : (f.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i * p);
    return PolyAccess::make(p, std::move(out));
  }

  static PolyMod random_below(const PolyMod& like, std::size_t degree, CounterRng& rng) {
    const Residue p = like.modulus();
    std::vector<Residue> out(degree);
    for (auto& c : out) c = static_cast<Residue>(rng.below(p));
    return PolyAccess::make(p, std::move(out));
  }

  static PolyMod to_poly(const PolyMod& f) { return f; }
};

template <>
struct FieldOps<Gf2Poly> {
  using Context = Gf2ModulusContext;

  static Residue characteristic(const Gf2Poly&) { return 2; }
  static Gf2Poly one(const Gf2Poly&) { return Gf2Poly::one(); }
  static Gf2Poly x(const Gf2Poly&) { return Gf2Poly::x(); }

  static Gf2Poly frobenius(const Gf2Poly& a, const Context& ctx) { return ctx.sqrmod(a); }
  static Gf2Poly pth_root(const Gf2Poly& f) { return f.sqrt_of_square(); }

  static Gf2Poly random_below(const Gf2Poly&, std::size_t degree, CounterRng& rng) {
    std::vector<Gf2Poly::Word> w((degree + 63) / 64);
    for (auto& word : w) word = rng();
    if (degree % 64 != 0 && !w.empty()) w.back() &= (Gf2Poly::Word{1} << (degree % 64)) - 1;
    return Gf2Poly(std::move(w));
  }

  static PolyMod to_poly(const Gf2Poly& f) { return f.to_poly(); }
};

template <class Poly>
std::size_t deg(const Poly& f) {
  return f.degree().value();
}

// ---------------------------------------------------------------------------
// Squarefree decomposition

template <class Poly>
void squarefree_rec(const Poly& f, std::size_t scale, std::vector<std::pair<Poly, std::size_t>>& out) {
  using Ops = FieldOps<Poly>;
  if (f.is_constant()) return;
  const Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_rec(Ops::pth_root(f), scale * Ops::characteristic(f), out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  std::size_t i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(std::move(fac), i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) squarefree_rec(Ops::pth_root(c), scale * Ops::characteristic(f), out);
}

// f monic and nonconstant.
template <class Poly>
std::vector<std::pair<Poly, std::size_t>> squarefree_parts(const Poly& f) {
  std::vector<std::pair<Poly, std::size_t>> out;
  squarefree_rec(f, 1, out);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

// ---------------------------------------------------------------------------
// Distinct-degree splitting, one degree at a time

template <class Poly>
class IncrementalDdf {
 public:
  using Ops = FieldOps<Poly>;
  using Context = typename Ops::Context;

  // f monic, squarefree, nonconstant.
  explicit IncrementalDdf(Poly f) : g_(std::move(f)), h_(Ops::x(g_)) {
    if (g_.is_constant()) {
      done_ = true;
      return;
    }
    ctx_.emplace(g_);
    h_ = ctx_->reduce(h_);
  }

  std::size_t searched_degree() const noexcept { return done_ ? kAll : d_; }
  bool done() const noexcept { return done_; }
  const Poly& remainder() const noexcept { return g_; }

  // Finds every factor of degree <= bound; emit(product, degree) for each
  // nontrivial degree part.
  template <class Emit>
  void advance_to(std::size_t bound, Emit&& emit) {
    while (!done_ && d_ < bound) {
      const std::size_t dg = deg(g_);
      if (dg < 2 * (d_ + 1)) {
        // Any remaining factor has degree > d_, so g_ is irreducible.
        emit(g_, dg);
        g_ = Ops::one(g_);
        done_ = true;
        return;
      }
      ++d_;
      h_ = Ops::frobenius(h_, *ctx_);
      Poly G = gcd(g_, h_ - ctx_->reduce(Ops::x(g_)));
      if (!G.is_one()) {
        g_ = g_ / G;
        emit(G, d_);
        if (g_.is_constant()) {
          done_ = true;
          return;
        }
        ctx_.emplace(g_);
        h_ = ctx_->reduce(h_);
      }
    }
  }

  static constexpr std::size_t kAll = static_cast<std::size_t>(-1);

 private:
  Poly g_;
  Poly h_;
  std::optional<Context> ctx_;
  std::size_t d_ = 0;
  bool done_ = false;
};

template <class Poly>
void require_squarefree(const Poly& f) {
  if (f.is_constant()) throw std::invalid_argument("distinct-degree split needs a nonconstant input");
  const Poly fp = f.derivative();
  if (fp.is_zero() || !gcd(f, fp).is_one()) {
    throw std::invalid_argument("distinct-degree split needs a squarefree input");
  }
}

// ---------------------------------------------------------------------------
// Equal-degree splitting

template <class Poly>
Poly splitting_element(const Poly& a, std::size_t d, const typename FieldOps<Poly>::Context& ctx) {
  using Ops = FieldOps<Poly>;
  const Residue p = Ops::characteristic(a);
  Poly t = a;
  Poly acc = a;
  if (p == 2) {
    // Absolute trace a + a^2 + ... + a^(2^(d-1)).
    for (std::size_t i = 1; i < d; ++i) {
      t = Ops::frobenius(t, ctx);
      acc = acc + t;
    }
    return acc;
  }
  // Norm a^(1 + p + ... + p^(d-1)) lands in F_p modulo each factor; its
  // quadratic character then splits the factors roughly in half.
  for (std::size_t i = 1; i < d; ++i) {
    t = Ops::frobenius(t, ctx);
    acc = ctx.mulmod(acc, t);
  }
  Poly r = powmod(acc, (p - 1) / 2, ctx);
  return r - Ops::one(a);
}

template <class Poly>
std::vector<Poly> equal_degree_factors(const Poly& f, std::size_t d, CounterRng& rng) {
  using Ops = FieldOps<Poly>;
  using Context = typename Ops::Context;
  constexpr int kMaxAttempts = 256;

  if (d == 0 || f.is_constant()) throw std::invalid_argument("equal-degree split: bad input");
  if (deg(f) % d != 0) {
    throw std::invalid_argument("equal-degree split: degree is not a multiple of d");
  }
  std::vector<Poly> result;
  std::vector<Poly> work{f};
  while (!work.empty()) {
    Poly g = std::move(work.back());
    work.pop_back();
    const std::size_t dg = deg(g);
    if (dg % d != 0) throw std::invalid_argument("equal-degree split: factor degree mismatch");
    if (dg == d) {
      result.push_back(std::move(g));
      continue;
    }
    const Context ctx(g);
    bool split = false;
    for (int attempt = 0; attempt < kMaxAttempts && !split; ++attempt) {
      Poly a = Ops::random_below(g, dg, rng);
      if (a.is_constant()) continue;
      Poly b = splitting_element(a, d, ctx);
      Poly G = b.is_zero() ? g : gcd(g, b);
      const std::size_t dG = deg(G);
      if (dG > 0 && dG < dg) {
        work.push_back(g / G);
        work.push_back(std::move(G));
        split = true;
      }
    }
    if (!split) {
      throw std::invalid_argument("equal-degree split failed; input is not a product of degree-d factors");
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Rabin irreducibility test

template <class Poly>
bool rabin_irreducible(const Poly& f_in) {
  using Ops = FieldOps<Poly>;
  if (f_in.is_constant()) throw std::invalid_argument("irreducibility of a constant");
  const Poly f = f_in.monic();
  const std::size_t n = deg(f);
  if (n == 1) return true;

  std::vector<std::size_t> cofactors;  // n / q for primes q | n
  {
    std::size_t m = n;
    for (std::size_t q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        cofactors.push_back(n / q);
        while (m % q == 0) m /= q;
      }
    }
    if (m > 1) cofactors.push_back(n / m);
  }
  std::sort(cofactors.begin(), cofactors.end());

  const typename Ops::Context ctx(f);
  const Poly x = ctx.reduce(Ops::x(f));
  Poly h = x;
  std::size_t next = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    h = Ops::frobenius(h, ctx);
    while (next < cofactors.size() && cofactors[next] == k) {
      if (!gcd(f, h - x).is_one()) return false;
      ++next;
    }
  }
  return h == x;
}

}  // namespace littlewood::detail
