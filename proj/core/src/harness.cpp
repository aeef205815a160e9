#include "littlewood/harness.hpp"

#include <sstream>
#include <stdexcept>

#include "littlewood/padic.hpp"
#include "littlewood/parallel.hpp"

namespace littlewood {
namespace {

using json = nlohmann::ordered_json;

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

CertifyItem certify_one(std::uint64_t index, LittlewoodSample sample, const std::vector<Residue>& primes,
                        bool use_2adic, CounterRng rng) {
  const LittlewoodSample monic = sample.normalized();
  auto outcome = certify(monic, primes, use_2adic, rng);
  std::optional<std::size_t> i_star;
  if (use_2adic) {
    const auto cert = littlewood_2adic_certificate(monic);
    if (cert.valid) i_star = cert.i_star;
  }
  return {index, std::move(sample), outcome.verdict, std::move(outcome.trace), i_star};
}

void check_primes(const std::vector<Residue>& primes, bool use_2adic) {
  for (Residue q : primes) {
    if (!is_small_prime(q)) throw std::invalid_argument("certifying primes must be primes <= 65521");
  }
  if (primes.empty() && !use_2adic) throw std::invalid_argument("no certificate sources given");
}

}  // namespace

LittlewoodSample SampleStream::sample(std::uint64_t index, std::size_t n) const {
  CounterRng rng(seed_, index, 0);
  std::vector<std::int8_t> signs(n + 1);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i % 64 == 0) word = rng();
    signs[i] = (word >> (i % 64)) & 1 ? -1 : 1;
  }
  return LittlewoodSample(std::move(signs));
}

json ExperimentReport::to_json() const {
  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = command;
  out["parameters"] = parameters;
  out["seed"] = seed ? json(*seed) : json(nullptr);
  out["aggregates"] = aggregates;
  out["items"] = items;
  if (wall_time_seconds) out["wall_time_seconds"] = *wall_time_seconds;
  return out;
}

std::string ExperimentReport::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << '\n';
  for (const auto& item : items) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? "," : "") << (item.contains(columns[c]) ? csv_cell(item[columns[c]]) : "");
    }
    os << '\n';
  }
  return os.str();
}

std::string fraction_string(std::uint64_t k, std::uint64_t n) {
  return std::to_string(k) + "/" + std::to_string(n);
}

std::size_t CertifyExperiment::certified() const {
  std::size_t c = 0;
  for (const auto& it : items) c += it.verdict == Verdict::CertifiedIrreducible;
  return c;
}

std::size_t CertifyExperiment::no_2adic_info() const {
  if (!use_2adic) return 0;
  std::size_t c = 0;
  for (const auto& it : items) c += !it.i_star.has_value();
  return c;
}

std::map<std::string, SourceStats> CertifyExperiment::source_stats() const {
  std::map<std::string, SourceStats> out;
  for (const auto& it : items) {
    for (std::size_t t = 0; t < it.trace.size(); ++t) {
      const auto& e = it.trace[t];
      auto& s = out[e.source];
      ++s.applied;
      s.removed += e.before - e.after;
      const bool last = t + 1 == it.trace.size();
      if (last && it.verdict == Verdict::CertifiedIrreducible && e.after < e.before) ++s.decisive;
    }
  }
  return out;
}

std::map<std::size_t, std::size_t> CertifyExperiment::i_star_histogram() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& it : items) {
    if (it.i_star) ++out[*it.i_star];
  }
  return out;
}

ExperimentReport CertifyExperiment::report() const {
  ExperimentReport r;
  r.command = command;
  r.parameters["n"] = n;
  r.parameters["samples"] = items.size();
  r.parameters["primes"] = primes;
  r.parameters["use_2adic"] = use_2adic;
  r.seed = seed;
  r.columns = {"index", "signs", "leading_sign", "verdict", "i_star", "allowed_degrees", "trace"};
  for (const auto& it : items) {
    json trace = json::array();
    for (const auto& e : it.trace) trace.push_back(e.source + ":" + std::to_string(e.before) + ">" + std::to_string(e.after));
    json row;
    row["index"] = it.index;
    row["signs"] = it.sample.to_string();
    row["leading_sign"] = static_cast<int>(it.sample.leading_sign());
    row["verdict"] = to_string(it.verdict);
    row["i_star"] = optional_json(it.i_star);
    row["allowed_degrees"] = it.trace.empty() ? n + 1 : it.trace.back().after;
    row["trace"] = trace;
    r.items.push_back(std::move(row));
  }
  const std::size_t c = certified();
  r.aggregates["certified"] = c;
  r.aggregates["samples"] = items.size();
  r.aggregates["rate"] = items.empty() ? 0.0 : static_cast<double>(c) / static_cast<double>(items.size());
  r.aggregates["rate_fraction"] = fraction_string(c, items.size());
  json sources = json::object();
  for (const auto& [name, s] : source_stats()) {
    sources[name] = {{"applied", s.applied}, {"degrees_removed", s.removed}, {"decisive", s.decisive}};
  }
  r.aggregates["sources"] = sources;
  if (use_2adic) {
    r.aggregates["no_2adic_info"] = no_2adic_info();
    json hist = json::object();
    for (const auto& [i, count] : i_star_histogram()) hist[std::to_string(i)] = count;
    r.aggregates["i_star_histogram"] = hist;
  }
  return r;
}

CertifyExperiment estimate_irreducibility(std::size_t n, std::size_t samples, const std::vector<Residue>& primes,
                                          bool use_2adic, std::uint64_t seed, unsigned threads) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  check_primes(primes, use_2adic);
  const SampleStream stream(seed);
  CertifyExperiment out{"estimate", n, primes, use_2adic, seed, {}};
  std::vector<std::optional<CertifyItem>> slots(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    slots[i] = certify_one(i, stream.sample(i, n), primes, use_2adic, stream.factor_rng(i));
  });
  for (auto& s : slots) out.items.push_back(std::move(*s));
  return out;
}

CertifyExperiment estimate_p2_pipeline(unsigned r, std::size_t samples, const std::vector<Residue>& primes,
                                       std::uint64_t seed, unsigned threads) {
  if (r < 2 || r > 20) throw std::invalid_argument("r must lie in [2, 20]");
  auto out = estimate_irreducibility((std::size_t{1} << r) - 1, samples, primes, true, seed, threads);
  out.command = "estimate-p2";
  return out;
}

CertifyExperiment estimate_p2_exhaustive(unsigned r, const std::vector<Residue>& primes, unsigned threads) {
  if (r < 2 || r > 4) throw std::invalid_argument("exhaustive runs need 2 <= r <= 4");
  check_primes(primes, true);
  const std::size_t n = (std::size_t{1} << r) - 1;
  const std::size_t count = std::size_t{1} << (n + 1);
  CertifyExperiment out{"estimate-p2", n, primes, true, std::nullopt, {}};
  std::vector<std::optional<CertifyItem>> slots(count);
  parallel_for(count, threads, [&](std::size_t bits) {
    slots[bits] = certify_one(bits, LittlewoodSample::from_bits(bits, n), primes, true, CounterRng(0, bits, 1));
  });
  for (auto& s : slots) out.items.push_back(std::move(*s));
  return out;
}

std::size_t SmoothnessExperiment::held() const {
  std::size_t c = 0;
  for (const auto& it : items) c += it.holds;
  return c;
}

std::map<std::size_t, std::size_t> SmoothnessExperiment::failure_profile() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& it : items) {
    if (it.witness) ++out[*it.witness];
  }
  return out;
}

ExperimentReport SmoothnessExperiment::report() const {
  ExperimentReport r;
  r.command = "smoothness";
  r.parameters["n"] = params.n;
  r.parameters["k"] = params.k;
  r.parameters["theta"] = params.theta;
  r.parameters["eps"] = params.eps;
  r.parameters["samples"] = items.size();
  r.parameters["m_first"] = params.m_first();
  r.parameters["m_last"] = params.m_last();
  r.seed = seed;
  r.columns = {"index", "holds", "witness"};
  for (const auto& it : items) {
    json row;
    row["index"] = it.index;
    row["holds"] = it.holds;
    row["witness"] = optional_json(it.witness);
    r.items.push_back(std::move(row));
  }
  const std::size_t h = held();
  r.aggregates["held"] = h;
  r.aggregates["samples"] = items.size();
  r.aggregates["frequency"] = items.empty() ? 0.0 : static_cast<double>(h) / static_cast<double>(items.size());
  r.aggregates["frequency_fraction"] = fraction_string(h, items.size());
  json profile = json::object();
  for (const auto& [m, count] : failure_profile()) profile[std::to_string(m)] = count;
  r.aggregates["first_failure_by_m"] = profile;
  return r;
}

SmoothnessExperiment run_smoothness_experiment(const SmoothnessParams& params, std::size_t samples,
                                               std::uint64_t seed, unsigned threads) {
  params.validate();
  const SampleStream stream(seed);
  SmoothnessExperiment out{params, seed, std::vector<SmoothnessItem>(samples)};
  parallel_for(samples, threads, [&](std::size_t i) {
    const auto outcome = smoothness_event(stream.sample(i, params.n), params);
    out.items[i] = {i, outcome.holds, outcome.witness};
  });
  return out;
}

}  // namespace littlewood
