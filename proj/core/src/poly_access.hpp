#pragma once

#include "littlewood/polyring.hpp"

namespace littlewood::detail {

// Builds PolyMod values from coefficient vectors that are already reduced
// mod p, skipping the modulus validation done by the public constructors.
struct PolyAccess {
  static PolyMod make(Residue modulus, std::vector<Residue> coeffs) noexcept {
    return PolyMod(PolyMod::Unchecked{}, modulus, std::move(coeffs));
  }
  static std::vector<Residue>& coeffs(PolyMod& f) noexcept { return f.coeffs_; }
};

}  // namespace littlewood::detail
