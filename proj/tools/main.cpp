// littlewood: command line front end.  Every subcommand builds an
// ExperimentReport and writes it as JSON or CSV.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "littlewood/certify.hpp"
#include "littlewood/equidist.hpp"
#include "littlewood/factorize.hpp"
#include "littlewood/harness.hpp"
#include "littlewood/numtheory.hpp"
#include "littlewood/padic.hpp"
#include "littlewood/spectral.hpp"

namespace lw = littlewood;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

struct Outcome {
  lw::ExperimentReport report;
  int exit_code = kExitOk;
};

std::string rational_string(const lw::Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string slope_string(const lw::Slope& s) {
  return s.den == 1 ? std::to_string(s.num) : std::to_string(s.num) + "/" + std::to_string(s.den);
}

Outcome scan_primes(std::uint64_t p_max) {
  lw::ExperimentReport r;
  r.command = "scan-primes";
  r.parameters["max"] = p_max;
  r.columns = {"p", "ord_mod_p", "ord_mod_p2", "qualifies", "theorem_applies", "lifting_checked_to"};
  json qualifying = json::array();
  for (const auto& rec : lw::artin_scan(p_max)) {
    r.items.push_back({{"p", rec.p},
                       {"ord_mod_p", rec.ord_mod_p},
                       {"ord_mod_p2", rec.ord_mod_p2},
                       {"qualifies", rec.qualifies},
                       {"theorem_applies", rec.theorem_applies},
                       {"lifting_checked_to", rec.lifting_checked_to}});
    if (rec.theorem_applies) qualifying.push_back(rec.p);
  }
  r.aggregates["qualifying"] = qualifying;
  return {r};
}

Outcome factor_cmd(const std::string& poly, const std::string& signs, lw::Residue p, std::uint64_t seed) {
  if (poly.empty() == signs.empty()) throw std::invalid_argument("give exactly one of --poly or --signs");
  const lw::PolyMod f = poly.empty() ? lw::reduce(lw::LittlewoodSample::parse(signs), p) : lw::parse_poly(poly, p);
  lw::CounterRng rng(seed);
  const auto fact = lw::factor(f, rng);
  lw::ExperimentReport r;
  r.command = "factor";
  r.parameters["p"] = p;
  r.parameters["poly"] = lw::format_poly(f);
  r.seed = seed;
  r.columns = {"factor", "degree", "multiplicity"};
  for (const auto& [g, mult] : fact.factors) {
    r.items.push_back({{"factor", lw::format_poly(g)}, {"degree", g.size() - 1}, {"multiplicity", mult}});
  }
  r.aggregates["unit"] = fact.unit;
  r.aggregates["degrees"] = lw::degree_multiset(fact);
  r.aggregates["irreducible"] = fact.factors.size() == 1 && fact.factors[0].multiplicity == 1;
  return {r};
}

Outcome cyclotomic_cmd(std::uint64_t p, unsigned r_max, lw::Residue q) {
  lw::ExperimentReport r;
  r.command = "cyclotomic";
  r.parameters["p"] = p;
  r.parameters["r"] = r_max;
  r.parameters["q"] = q;
  r.columns = {"k", "degree", "irreducible", "poly"};
  lw::PolyMod product = lw::PolyMod::one(q);
  bool all_irreducible = true;
  for (unsigned k = 1; k <= r_max; ++k) {
    const auto phi = lw::cyclotomic_prime_power(p, k, q);
    const bool irr = lw::is_irreducible(phi);
    all_irreducible = all_irreducible && irr;
    product *= phi;
    r.items.push_back(
        {{"k", k}, {"degree", phi.size() - 1}, {"irreducible", irr}, {"poly", lw::format_poly(phi)}});
  }
  const std::uint64_t n = lw::checked_pow(p, r_max) - 1;
  r.aggregates["n"] = n;
  r.aggregates["product_equals_all_ones"] = product == lw::reduce(lw::LittlewoodSample::all_ones(n), q);
  r.aggregates["all_irreducible"] = all_irreducible;
  return {r, all_irreducible ? kExitOk : kExitNegative};
}

Outcome newton_cmd(const std::string& signs) {
  const auto f = lw::LittlewoodSample::parse(signs);
  const auto vals = lw::shifted_two_adic_valuations(f);
  const auto poly = lw::newton_polygon(vals);
  const auto cert = lw::littlewood_2adic_certificate(f);
  lw::ExperimentReport r;
  r.command = "newton";
  r.parameters["signs"] = f.to_string();
  r.columns = {"start", "width", "height", "slope"};
  std::size_t x = poly.vertices.empty() ? 0 : poly.vertices.front().index;
  for (const auto& s : poly.segments) {
    r.items.push_back({{"start", x}, {"width", s.width}, {"height", s.height}, {"slope", slope_string(s.slope)}});
    x += s.width;
  }
  json v = json::array();
  for (const auto& val : vals) v.push_back(val ? json(*val) : json(nullptr));
  r.aggregates["valuations"] = v;
  r.aggregates["certificate_valid"] = cert.valid;
  r.aggregates["i_star"] = cert.valid ? json(cert.i_star) : json(nullptr);
  r.aggregates["factor_degree_lower_bound"] = cert.valid ? json(cert.lower_bound) : json(nullptr);
  return {r};
}

Outcome certify_cmd(const std::string& signs, const std::vector<lw::Residue>& primes, bool no_2adic,
                    std::uint64_t seed) {
  const auto f = lw::LittlewoodSample::parse(signs);
  lw::CounterRng rng(seed);
  const auto outcome = lw::certify(f.normalized(), primes, !no_2adic, rng);
  lw::ExperimentReport r;
  r.command = "certify";
  r.parameters["signs"] = f.to_string();
  r.parameters["primes"] = primes;
  r.parameters["use_2adic"] = !no_2adic;
  r.seed = seed;
  r.columns = {"source", "before", "after"};
  for (const auto& e : outcome.trace) r.items.push_back({{"source", e.source}, {"before", e.before}, {"after", e.after}});
  r.aggregates["verdict"] = lw::to_string(outcome.verdict);
  r.aggregates["allowed_degrees"] = outcome.constraint.values();
  return {r, outcome.verdict == lw::Verdict::CertifiedIrreducible ? kExitOk : kExitNegative};
}

Outcome delta_cmd(lw::Residue p, std::size_t n, std::size_t m, std::uint64_t budget, unsigned threads) {
  const auto rep = lw::delta_exact(p, n, m, budget, threads);
  lw::ExperimentReport r;
  r.command = "delta";
  r.parameters["p"] = p;
  r.parameters["n"] = n;
  r.parameters["m"] = m;
  r.columns = {"D", "deviation"};
  for (const auto& t : rep.per_D) {
    r.items.push_back({{"D", lw::format_poly(t.D)}, {"deviation", rational_string(t.deviation)}});
  }
  r.aggregates["total"] = rational_string(rep.total);
  r.aggregates["total_approx"] = rep.total.convert_to<double>();
  return {r};
}

Outcome fourier_cmd(const lw::FourierCheckParams& params, unsigned threads) {
  const auto rep = lw::verify_fourier_bound(params, threads);
  lw::ExperimentReport r;
  r.command = "fourier-check";
  r.parameters["P"] = params.P;
  r.parameters["s"] = params.s;
  r.parameters["gamma"] = params.gamma;
  r.parameters["slack"] = params.slack;
  r.columns = {"Q", "R", "l", "sum", "bound", "margin", "pass"};
  for (const auto& row : rep.rows) {
    r.items.push_back({{"Q", row.Q},
                       {"R", row.R},
                       {"l", row.l},
                       {"sum", row.sum},
                       {"bound", row.bound},
                       {"margin", row.margin},
                       {"pass", row.pass}});
  }
  r.aggregates["cases"] = rep.cases;
  r.aggregates["rows"] = rep.rows.size();
  r.aggregates["worst_ratio"] = rep.worst_ratio;
  r.aggregates["all_pass"] = rep.all_pass;
  return {r, rep.all_pass ? kExitOk : kExitNegative};
}

void emit(const Globals& g, lw::ExperimentReport report, double seconds) {
  if (g.timing) report.wall_time_seconds = seconds;
  const std::string text = g.format == "csv" ? report.to_csv() : report.to_json_string();
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + g.out);
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducibility experiments for random Littlewood polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_flag("--timing", g.timing, "Include wall time in the report");

  std::uint64_t scan_max = 200;
  auto* scan = app.add_subcommand("scan-primes", "Odd primes p for which 2 generates (Z/p^2)^x");
  scan->add_option("--max", scan_max)->capture_default_str();

  std::string poly, signs;
  lw::Residue p = 3;
  auto* fac = app.add_subcommand("factor", "Factor a polynomial over F_p");
  fac->add_option("--p", p)->capture_default_str();
  fac->add_option("--poly", poly, "Coefficients, lowest degree first, e.g. 1,0,1");
  fac->add_option("--signs", signs, "Littlewood sign pattern, e.g. +-++");

  std::uint64_t cyc_p = 11;
  unsigned cyc_r = 2;
  lw::Residue cyc_q = 2;
  auto* cyc = app.add_subcommand("cyclotomic", "Phi_{p^k} mod q for k = 1..r and their product");
  cyc->add_option("--p", cyc_p)->capture_default_str();
  cyc->add_option("--r", cyc_r)->capture_default_str();
  cyc->add_option("--q", cyc_q)->capture_default_str();

  auto* newton = app.add_subcommand("newton", "2-adic Newton polygon of f(X+1)");
  newton->add_option("--signs", signs)->required();

  std::vector<lw::Residue> primes{2, 3, 5, 7};
  bool no_2adic = false;
  auto* cert = app.add_subcommand("certify", "Certify irreducibility (exit 0 certified, 1 unknown)");
  cert->add_option("--signs", signs)->required();
  cert->add_option("--primes", primes)->delimiter(',')->capture_default_str();
  cert->add_flag("--no-2adic", no_2adic);

  std::size_t n = 10, samples = 200;
  bool use_2adic = false;
  auto* est = app.add_subcommand("estimate", "Monte Carlo certified-irreducible rate");
  est->add_option("--n", n)->required();
  est->add_option("--samples", samples)->capture_default_str();
  est->add_option("--primes", primes)->delimiter(',')->capture_default_str();
  est->add_flag("--use-2adic", use_2adic);

  unsigned r = 5;
  bool exhaustive = false;
  auto* p2 = app.add_subcommand("estimate-p2", "n = 2^r - 1 pipeline with the 2-adic certificate");
  p2->add_option("--r", r)->required();
  p2->add_option("--samples", samples)->capture_default_str();
  p2->add_option("--primes", primes)->delimiter(',')->capture_default_str();
  p2->add_flag("--exhaustive", exhaustive, "Every sign pattern instead of samples");

  std::size_t m = 1;
  std::uint64_t budget = 0;
  auto* delta = app.add_subcommand("delta", "Exact equidistribution deficiency");
  delta->add_option("--p", p)->capture_default_str();
  delta->add_option("--n", n)->required();
  delta->add_option("--m", m)->required();
  delta->add_option("--budget", budget, "Bound on (m+1) p^m; default from LITTLEWOOD_DELTA_BUDGET");

  lw::SmoothnessParams sp{1.0, 1.0 / 11.0, 0.001, 0};
  auto* smooth = app.add_subcommand("smoothness", "Bounded-smoothness event frequency for f mod 3");
  smooth->add_option("--n", sp.n)->required();
  smooth->add_option("--k", sp.k)->capture_default_str();
  smooth->add_option("--theta", sp.theta)->capture_default_str();
  smooth->add_option("--eps", sp.eps)->capture_default_str();
  smooth->add_option("--samples", samples)->capture_default_str();

  lw::FourierCheckParams fp{1155, 735, 0.5, 0.9999};
  auto* fourier = app.add_subcommand("fourier-check", "Coset bound on sums of |cos|^s");
  fourier->add_option("--P", fp.P)->capture_default_str();
  fourier->add_option("--s", fp.s)->capture_default_str();
  fourier->add_option("--gamma", fp.gamma)->capture_default_str();
  fourier->add_option("--slack", fp.slack)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    if (*scan) {
      out = scan_primes(scan_max);
    } else if (*fac) {
      out = factor_cmd(poly, signs, p, g.seed);
    } else if (*cyc) {
      out = cyclotomic_cmd(cyc_p, cyc_r, cyc_q);
    } else if (*newton) {
      out = newton_cmd(signs);
    } else if (*cert) {
      out = certify_cmd(signs, primes, no_2adic, g.seed);
    } else if (*est) {
      out.report = lw::estimate_irreducibility(n, samples, primes, use_2adic, g.seed, g.threads).report();
    } else if (*p2) {
      out.report = exhaustive ? lw::estimate_p2_exhaustive(r, primes, g.threads).report()
                              : lw::estimate_p2_pipeline(r, samples, primes, g.seed, g.threads).report();
    } else if (*delta) {
      out = delta_cmd(p, n, m, budget ? budget : lw::default_delta_budget(), g.threads);
    } else if (*smooth) {
      out.report = lw::run_smoothness_experiment(sp, samples, g.seed, g.threads).report();
    } else if (*fourier) {
      out = fourier_cmd(fp, g.threads);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    emit(g, std::move(out.report), elapsed.count());
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
