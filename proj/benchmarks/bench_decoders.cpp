#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pdec/constructions.hpp"
#include "pdec/decoders.hpp"
#include "pdec/oracle.hpp"

namespace {

using namespace pdec;

// Codewords of the doubly-even code with `weight` random bit flips each.
std::vector<ByteArray4x10> corrupted_words(int weight, std::size_t count) {
  const auto g = printed_c40_de();
  std::mt19937_64 rng(1234 + weight);
  std::uniform_int_distribution<int> pos(0, 39);
  std::vector<ByteArray4x10> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto v = g.encode(rng() & 0xFFFFF);
    const auto c = v;
    while (distance(v, c) < weight) v.flip(pos(rng));
    out.emplace_back(v);
  }
  return out;
}

template <Algorithm A>
void BM_Decode(benchmark::State& state) {
  const auto words = corrupted_words(static_cast<int>(state.range(0)), 4096);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(words[i++ & 4095], A, CodeVariant::doubly_even));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Decode<Algorithm::representation>)->Name("represent_decode")->DenseRange(0, 4);
BENCHMARK(BM_Decode<Algorithm::syndrome>)->Name("syndrome_decode")->DenseRange(0, 4);

void BM_OracleLinear(benchmark::State& state) {
  const auto& table = de_oracle();
  const auto words = corrupted_words(static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_decode(words[i++ & 255].word(), table, 3));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OracleLinear)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_OracleIndexed(benchmark::State& state) {
  const auto& table = de_oracle();
  const auto words = corrupted_words(static_cast<int>(state.range(0)), 4096);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_decode_indexed(words[i++ & 4095].word(), table, 3));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OracleIndexed)->Arg(1)->Arg(4);

void BM_Certify(benchmark::State& state) {
  const auto g = rho_B(build_E10());
  for (auto _ : state) benchmark::DoNotOptimize(certify(g));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
