#include <benchmark/benchmark.h>

#include "aaco/code_analysis.hpp"
#include "aaco/constructions.hpp"
#include "aaco/matroid.hpp"
#include "aaco/rng.hpp"
#include "aaco/trellis.hpp"
#include "aaco/wiretap.hpp"

using namespace aaco;

namespace {

BlockCode random_binary_code(int k, int n) {
  Rng rng(1234);
  const FiniteField f2 = FiniteField::prime(2);
  while (true) {
    GeneratorMatrix g{f2, std::vector<std::vector<int>>(k, std::vector<int>(n))};
    for (auto& row : g.rows) {
      for (int& v : row) v = static_cast<int>(rng.below(2));
    }
    if (g.rank() == k) return linear_code(g);
  }
}

void BM_matroid_dual(benchmark::State& state) {
  const Matroid m = Matroid::uniform(static_cast<int>(state.range(0)) / 2,
                                     static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.dual());
}
BENCHMARK(BM_matroid_dual)->Arg(8)->Arg(12)->Arg(16);

void BM_hamming_weights(benchmark::State& state) {
  const Matroid m = Matroid::uniform(static_cast<int>(state.range(0)) / 2,
                                     static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.hamming_weights());
}
BENCHMARK(BM_hamming_weights)->Arg(12)->Arg(16);

void BM_code_matroid(benchmark::State& state) {
  const BlockCode code = random_binary_code(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(code_matroid(code));
}
BENCHMARK(BM_code_matroid)->Arg(6)->Arg(8)->Arg(10);

void BM_ghw_via_matroid(benchmark::State& state) {
  const BlockCode code = random_binary_code(4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(ghw_via_matroid(code));
}
BENCHMARK(BM_ghw_via_matroid);

void BM_enumerate_subcodes(benchmark::State& state) {
  const BlockCode code = running_example_cprime();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subcodes(code, 1));
}
BENCHMARK(BM_enumerate_subcodes);

void BM_trellis_build(benchmark::State& state) {
  const BlockCode code = random_binary_code(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_min_trellis(code));
}
BENCHMARK(BM_trellis_build)->Arg(8)->Arg(10);

void BM_viterbi_decode(benchmark::State& state) {
  const BlockCode code = random_binary_code(4, 10);
  const Trellis trellis = build_min_trellis(code);
  const Word received(10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(viterbi_decode(trellis, received));
}
BENCHMARK(BM_viterbi_decode);

void BM_wiretap_profile(benchmark::State& state) {
  const WiretapScheme scheme = WiretapScheme::with_addition(random_binary_code(4, 8));
  for (auto _ : state) benchmark::DoNotOptimize(scheme.equivocation_profile());
}
BENCHMARK(BM_wiretap_profile);

void BM_wiretap_encode(benchmark::State& state) {
  const WiretapScheme scheme = WiretapScheme::with_addition(random_binary_code(4, 8));
  const Word message(4, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(scheme.encode(message, seed++));
}
BENCHMARK(BM_wiretap_encode);

}  // namespace

BENCHMARK_MAIN();
