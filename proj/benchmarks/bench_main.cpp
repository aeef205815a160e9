#include <benchmark/benchmark.h>

#include <random>

#include "littlewood/certify.hpp"
#include "littlewood/factorize.hpp"
#include "littlewood/gf2poly.hpp"
#include "littlewood/harness.hpp"
#include "littlewood/spectral.hpp"

using namespace littlewood;

namespace {

PolyMod random_poly(Residue p, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Residue> c(size);
  for (auto& x : c) x = static_cast<Residue>(gen() % p);
  c.back() = 1;
  return PolyMod(p, std::move(c));
}

void BM_MulModP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_poly(3, n, 1), b = random_poly(3, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulModP)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_MulGeneric2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_poly(2, n, 1), b = random_poly(2, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MulGeneric2)->RangeMultiplier(4)->Range(64, 16384);

void BM_MulBitPacked(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = Gf2Poly::from_poly(random_poly(2, n, 1)), b = Gf2Poly::from_poly(random_poly(2, n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MulBitPacked)->RangeMultiplier(4)->Range(64, 16384);

void BM_PowmodMod3(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModulusContext ctx(random_poly(3, n + 1, 3));
  const auto x = PolyMod::x(3);
  for (auto _ : state) benchmark::DoNotOptimize(powmod(x, 1u << 20, ctx));
}
BENCHMARK(BM_PowmodMod3)->RangeMultiplier(4)->Range(64, 4096);

void BM_FactorLittlewood(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<Residue>(state.range(1));
  const auto f = reduce(SampleStream(7).sample(0, n), p);
  for (auto _ : state) {
    CounterRng rng(1);
    benchmark::DoNotOptimize(factor(f, rng));
  }
}
BENCHMARK(BM_FactorLittlewood)->ArgsProduct({{127, 511, 2047}, {2, 3, 5}});

void BM_Certify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SampleStream stream(11);
  const std::vector<Residue> primes{2, 3, 5, 7};
  std::uint64_t i = 0;
  for (auto _ : state) {
    CounterRng rng(i);
    benchmark::DoNotOptimize(certify(stream.sample(i++, n).normalized(), primes, true, rng));
  }
}
BENCHMARK(BM_Certify)->Arg(120)->Arg(255)->Arg(1023);

void BM_FourierCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_fourier_bound({1155, 735, 0.5, 0.9999}));
}
BENCHMARK(BM_FourierCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
