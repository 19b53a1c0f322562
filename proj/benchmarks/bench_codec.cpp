#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "lemcodec/codec.hpp"
#include "lemcodec/ks.hpp"
#include "lemcodec/random.hpp"
#include "lemcodec/spectrum.hpp"
#include "lemcodec/synth.hpp"

using namespace lemcodec;

namespace {

// A few prototype blocks repeated as random permutations, plus some fresh noise.
std::vector<double> mixed_series(std::size_t blocks, std::uint32_t b) {
  Rng rng(1);
  std::vector<std::vector<double>> protos(8, std::vector<double>(b));
  for (std::size_t g = 0; g < protos.size(); ++g) {
    for (auto& v : protos[g]) v = rng.normal(10.0 * static_cast<double>(g), 1.0);
  }
  std::vector<double> series;
  series.reserve(blocks * b);
  for (std::size_t j = 0; j < blocks; ++j) {
    std::vector<double> block;
    if (rng.below(10) == 0) {
      block.resize(b);
      for (auto& v : block) v = rng.normal(rng.uniform() * 100.0, 1.0);
    } else {
      block = protos[rng.below(protos.size())];
      rng.shuffle(std::span<double>(block));
    }
    series.insert(series.end(), block.begin(), block.end());
  }
  return series;
}

void BM_Encode(benchmark::State& state) {
  CodecParams p;
  p.block_size = 32;
  p.dict_count = static_cast<int>(state.range(0));
  if (state.range(1)) p.rtol = 0.1;
  const auto series = mixed_series(4096, p.block_size);
  for (auto _ : state) benchmark::DoNotOptimize(encode(series, p));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * series.size() * sizeof(double)));
}
BENCHMARK(BM_Encode)->ArgsProduct({{1, 16, 255}, {0, 1}})->ArgNames({"D", "gate"});

void BM_Decode(benchmark::State& state) {
  CodecParams p;
  p.block_size = 32;
  p.dict_count = static_cast<int>(state.range(0));
  const auto series = mixed_series(4096, p.block_size);
  const auto stream = encode(series, p);
  for (auto _ : state) benchmark::DoNotOptimize(decode(stream, 0));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * series.size() * sizeof(double)));
}
BENCHMARK(BM_Decode)->Arg(1)->Arg(255)->ArgName("D");

void BM_EncodeResidualTrend(benchmark::State& state) {
  CodecParams p;
  p.mode = Mode::kResidual;
  p.block_size = 64;
  const auto series = gen_trend({0.0, 1.0, 0.05, 64 * 4096, 3});
  for (auto _ : state) benchmark::DoNotOptimize(encode(series, p));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * series.size() * sizeof(double)));
}
BENCHMARK(BM_EncodeResidualTrend);

void BM_KsTest(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  std::vector<double> a(n), b(n);
  for (auto& v : a) v = rng.normal();
  for (auto& v : b) v = rng.normal();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (auto _ : state) benchmark::DoNotOptimize(ks_test(a, b));
}
BENCHMARK(BM_KsTest)->RangeMultiplier(4)->Range(16, 1024);

void BM_Spectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = gen_trend({0.0, 0.0, 1.0, n, 4});
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(x, n));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(16)->Range(256, 65536);

}  // namespace

BENCHMARK_MAIN();
