#pragma once

// Seeded sampling of random Littlewood polynomials and the Monte Carlo
// experiments built on the certifier.  Every result is a pure function of
// the parameters and the seed; the thread count only changes wall time.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "littlewood/certify.hpp"
#include "littlewood/equidist.hpp"
#include "littlewood/polyring.hpp"

namespace littlewood {

inline constexpr int kReportSchemaVersion = 1;

/// sample(i, n) depends only on (seed, i, n).
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) noexcept : seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }
  LittlewoodSample sample(std::uint64_t index, std::size_t n) const;

  /// Randomness for the equal-degree splits of sample `index`.
  CounterRng factor_rng(std::uint64_t index) const noexcept { return CounterRng(seed_, index, 1); }

 private:
  std::uint64_t seed_;
};

/// Generic serialized form shared by every CLI command.
struct ExperimentReport {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> columns;          // keys of each item, in CSV order
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  nlohmann::ordered_json aggregates = nlohmann::ordered_json::object();
  std::optional<double> wall_time_seconds;   // left out unless requested

  nlohmann::ordered_json to_json() const;
  std::string to_json_string() const;
  /// Header plus one line per item.
  std::string to_csv() const;
};

/// "k/N".
std::string fraction_string(std::uint64_t k, std::uint64_t n);

struct CertifyItem {
  std::uint64_t index;
  LittlewoodSample sample;  // as drawn, before normalization
  Verdict verdict;
  std::vector<TraceEntry> trace;
  std::optional<std::size_t> i_star;  // set when the 2-adic certificate was valid
};

struct SourceStats {
  std::size_t applied = 0;    // samples where the source was consulted
  std::size_t removed = 0;    // degrees removed, summed over samples
  std::size_t decisive = 0;   // samples where it completed the certificate
};

struct CertifyExperiment {
  std::string command;
  std::size_t n;
  std::vector<Residue> primes;
  bool use_2adic;
  std::optional<std::uint64_t> seed;  // empty for exhaustive runs
  std::vector<CertifyItem> items;

  std::size_t certified() const;
  /// Samples whose 2-adic certificate was consulted but carried no information.
  std::size_t no_2adic_info() const;
  std::map<std::string, SourceStats> source_stats() const;
  std::map<std::size_t, std::size_t> i_star_histogram() const;

  ExperimentReport report() const;
};

/// Certifies `samples` draws of degree n.  Requires n >= 1, samples >= 1.
CertifyExperiment estimate_irreducibility(std::size_t n, std::size_t samples,
                                          const std::vector<Residue>& primes, bool use_2adic,
                                          std::uint64_t seed, unsigned threads = 1);

/// n = 2^r - 1 with the 2-adic certificate first.  Requires r >= 2.
CertifyExperiment estimate_p2_pipeline(unsigned r, std::size_t samples, const std::vector<Residue>& primes,
                                       std::uint64_t seed, unsigned threads = 1);

/// Every one of the 2^(n+1) sign patterns for n = 2^r - 1; item index is the
/// bit pattern (bit i set means coefficient i is -1).  Requires 2 <= r <= 4.
CertifyExperiment estimate_p2_exhaustive(unsigned r, const std::vector<Residue>& primes, unsigned threads = 1);

struct SmoothnessItem {
  std::uint64_t index;
  bool holds;
  std::optional<std::size_t> witness;
};

struct SmoothnessExperiment {
  SmoothnessParams params;
  std::uint64_t seed;
  std::vector<SmoothnessItem> items;

  std::size_t held() const;
  /// First failing m -> number of samples.
  std::map<std::size_t, std::size_t> failure_profile() const;
  ExperimentReport report() const;
};

SmoothnessExperiment run_smoothness_experiment(const SmoothnessParams& params, std::size_t samples,
                                               std::uint64_t seed, unsigned threads = 1);

}  // namespace littlewood
