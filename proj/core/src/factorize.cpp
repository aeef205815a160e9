#include "littlewood/factorize.hpp"

#include <algorithm>
#include <stdexcept>
#include <optional>
#include <variant>

#include "factor_kernels.hpp"

namespace littlewood {

namespace {

using detail::FieldOps;

bool factor_less(const PolyMod& a, const PolyMod& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

template <class Poly>
std::vector<SquarefreePart> squarefree_impl(const Poly& monic_f) {
  std::vector<SquarefreePart> out;
  for (auto& [part, mult] : detail::squarefree_parts(monic_f)) {
    out.push_back({FieldOps<Poly>::to_poly(part), mult});
  }
  return out;
}

template <class Poly>
PartialDegreeSplit ddf_impl(const Poly& f, std::size_t max_degree) {
  detail::require_squarefree(f);
  detail::IncrementalDdf<Poly> ddf(f.monic());
  PartialDegreeSplit out{{}, PolyMod::one(f.modulus()), max_degree};
  std::optional<Poly> large;  // irreducible leftover found past the bound
  ddf.advance_to(max_degree, [&](const Poly& product, std::size_t d) {
    if (d <= max_degree) {
      out.parts.push_back({FieldOps<Poly>::to_poly(product), d});
    } else {
      large = product;
    }
  });
  out.remainder = FieldOps<Poly>::to_poly(large ? *large : ddf.remainder());
  return out;
}

template <class Poly>
Factorization factor_impl(const Poly& monic_f, Residue unit, CounterRng& rng) {
  Factorization out{monic_f.modulus(), unit, {}};
  if (monic_f.is_constant()) return out;
  for (auto& [part, mult] : detail::squarefree_parts(monic_f)) {
    detail::IncrementalDdf<Poly> ddf(part);
    ddf.advance_to(detail::deg(part), [&](const Poly& product, std::size_t d) {
      for (auto& irr : detail::equal_degree_factors(product, d, rng)) {
        out.factors.push_back({FieldOps<Poly>::to_poly(irr), mult});
      }
    });
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return factor_less(a.factor, b.factor); });
  return out;
}

}  // namespace

PolyMod Factorization::expand() const {
  PolyMod out = PolyMod::constant(modulus, unit);
  for (const auto& [f, mult] : factors) {
    for (std::size_t i = 0; i < mult; ++i) out *= f;
  }
  return out;
}

std::size_t Factorization::degree() const noexcept {
  std::size_t total = 0;
  for (const auto& [f, mult] : factors) total += mult * (f.size() - 1);
  return total;
}

DegreeMultiset degree_multiset(const Factorization& fact) {
  DegreeMultiset out;
  for (const auto& [f, mult] : fact.factors) out.insert(out.end(), mult, f.size() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SquarefreePart> squarefree_decompose(const PolyMod& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  const PolyMod m = f.monic();
  if (m.modulus() == 2) return squarefree_impl(Gf2Poly::from_poly(m));
  return squarefree_impl(m);
}

std::vector<DegreePart> distinct_degree_split(const PolyMod& f) {
  if (f.is_constant()) throw std::invalid_argument("distinct-degree split needs a nonconstant input");
  return distinct_degree_split(f, f.degree().value()).parts;
}

PartialDegreeSplit distinct_degree_split(const PolyMod& f, std::size_t max_degree) {
  if (f.modulus() == 2) return ddf_impl(Gf2Poly::from_poly(f), max_degree);
  return ddf_impl(f, max_degree);
}

std::vector<PolyMod> equal_degree_split(const PolyMod& f, std::size_t d, CounterRng& rng) {
  if (!f.is_monic()) throw std::invalid_argument("equal-degree split needs a monic input");
  std::vector<PolyMod> out;
  if (f.modulus() == 2) {
    for (auto& g : detail::equal_degree_factors(Gf2Poly::from_poly(f), d, rng)) {
      out.push_back(g.to_poly());
    }
  } else {
    out = detail::equal_degree_factors(f, d, rng);
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

Factorization factor(const PolyMod& f, CounterRng& rng) {
  if (f.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  const Residue unit = f.leading();
  const PolyMod m = f.monic();
  if (m.modulus() == 2) return factor_impl(Gf2Poly::from_poly(m), unit, rng);
  return factor_impl(m, unit, rng);
}

bool is_irreducible(const PolyMod& f) {
  if (f.is_constant()) throw std::invalid_argument("irreducibility of a constant");
  if (f.modulus() == 2) return detail::rabin_irreducible(Gf2Poly::from_poly(f));
  return detail::rabin_irreducible(f);
}

SmoothPart smooth_part(const Factorization& fact, std::size_t m) {
  SmoothPart out{0, 1};
  for (const auto& [f, mult] : fact.factors) {
    if (f.size() - 1 <= m) {
      out.degree += mult * (f.size() - 1);
      out.tau *= mult + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DegreeCensus

namespace {

template <class Poly>
struct CensusSlot {
  detail::IncrementalDdf<Poly> ddf;
  std::size_t multiplicity;
};

template <class Poly>
using CensusSlots = std::vector<CensusSlot<Poly>>;

}  // namespace

struct DegreeCensus::State {
  std::variant<CensusSlots<PolyMod>, CensusSlots<Gf2Poly>> slots;
  std::vector<Entry> entries;
  std::size_t bound = 0;
  bool complete = false;

  template <class Poly>
  void init(const Poly& monic_f) {
    CensusSlots<Poly> s;
    if (!monic_f.is_constant()) {
      for (auto& [part, mult] : detail::squarefree_parts(monic_f)) {
        s.push_back({detail::IncrementalDdf<Poly>(std::move(part)), mult});
      }
    }
    complete = s.empty();
    slots = std::move(s);
  }

  void add(std::size_t degree, std::size_t multiplicity, std::size_t count) {
    for (auto& e : entries) {
      if (e.degree == degree && e.multiplicity == multiplicity) {
        e.count += count;
        return;
      }
    }
    entries.push_back({degree, multiplicity, count});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.multiplicity < b.multiplicity;
    });
  }
};

DegreeCensus::DegreeCensus(const PolyMod& f) : state_(std::make_unique<State>()) {
  if (f.is_zero()) throw std::invalid_argument("degree census of the zero polynomial");
  const PolyMod m = f.monic();
  if (m.modulus() == 2) {
    state_->init(Gf2Poly::from_poly(m));
  } else {
    state_->init(m);
  }
}

DegreeCensus::~DegreeCensus() = default;
DegreeCensus::DegreeCensus(DegreeCensus&&) noexcept = default;
DegreeCensus& DegreeCensus::operator=(DegreeCensus&&) noexcept = default;

void DegreeCensus::extend_to(std::size_t bound) {
  if (bound <= state_->bound || state_->complete) {
    state_->bound = std::max(state_->bound, bound);
    return;
  }
  std::visit(
      [&](auto& slots) {
        bool all_done = true;
        for (auto& slot : slots) {
          slot.ddf.advance_to(bound, [&](const auto& product, std::size_t d) {
            state_->add(d, slot.multiplicity, detail::deg(product) / d);
          });
          all_done = all_done && slot.ddf.done();
        }
        state_->complete = all_done;
      },
      state_->slots);
  state_->bound = bound;
}

std::size_t DegreeCensus::bound() const noexcept { return state_->bound; }
bool DegreeCensus::complete() const noexcept { return state_->complete; }
const std::vector<DegreeCensus::Entry>& DegreeCensus::entries() const noexcept {
  return state_->entries;
}

SmoothPart DegreeCensus::smooth_part(std::size_t m) {
  extend_to(m);
  SmoothPart out{0, 1};
  for (const auto& e : state_->entries) {
    if (e.degree > m) continue;
    out.degree += e.count * e.multiplicity * e.degree;
    out.tau *= boost::multiprecision::pow(boost::multiprecision::cpp_int(e.multiplicity + 1),
                                          static_cast<unsigned>(e.count));
  }
  return out;
}

}  // namespace littlewood
