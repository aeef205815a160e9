// Slow tier: every monic pattern of degree 11..15, once per single certificate
// source.  Each certified pattern is checked against the rational
// factorization oracle.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "littlewood/certify.hpp"
#include "oracles.hpp"

using namespace littlewood;

namespace {

struct Source {
  std::string name;
  std::vector<Residue> primes;
  bool use_2adic;
};

}  // namespace

int main() {
  std::vector<Source> sources{{"2-adic", {}, true}};
  for (Residue q : {2, 3, 5, 7, 11, 13}) sources.push_back({"mod " + std::to_string(q), {q}, false});

  std::size_t violations = 0;
  for (std::size_t n = 11; n <= 15; ++n) {
    // Leading sign fixed to +1.  Oracle verdicts: 0 unknown, 1 irreducible, 2 reducible.
    std::vector<LittlewoodSample> samples;
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << n); ++low) samples.push_back(LittlewoodSample::from_bits(low, n));
    std::vector<char> verdict(samples.size(), 0);
    auto reducible = [&](std::uint64_t i) {
      if (verdict[i] == 0) verdict[i] = oracle::reducible_over_q(samples[i]) ? 2 : 1;
      return verdict[i] == 2;
    };
    for (const auto& src : sources) {
      std::size_t certified = 0, bad = 0;
      for (std::uint64_t low = 0; low < samples.size(); ++low) {
        CounterRng rng(7, low, n);
        if (certify(samples[low], src.primes, src.use_2adic, rng).verdict != Verdict::CertifiedIrreducible) continue;
        ++certified;
        bad += reducible(low);
      }
      violations += bad;
      std::cout << "n=" << n << " " << src.name << ": " << certified << " certified, " << bad << " violations\n";
    }
  }
  std::cout << (violations == 0 ? "PASS" : "FAIL") << std::endl;
  return violations == 0 ? 0 : 1;
}
