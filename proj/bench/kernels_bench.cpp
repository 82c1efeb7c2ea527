// Serial reference kernels against the bit-parallel / OpenMP ones.
// Thread count for the parallel variants follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "pauli/grouping.hpp"
#include "pauli/pauli_sum_soa.hpp"
#include "pauli/random.hpp"
#include "pauli/reference.hpp"

using namespace pauli;

namespace {

constexpr std::size_t kQubits = 500;
using Sum = PauliSum<8>;

Sum sum_of(std::size_t m, std::uint64_t seed) { return random_sum<8>(kQubits, m, seed); }

void BM_PairMulReference(benchmark::State& state) {
  const auto a = sum_of(state.range(0), 1), b = sum_of(state.range(0), 2);
  for (auto _ : state) {
    for (std::size_t t = 0; t < a.size(); ++t) benchmark::DoNotOptimize(reference::multiply(a[t].string, b[t].string));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PairMulAoS(benchmark::State& state) {
  const auto a = sum_of(state.range(0), 1), b = sum_of(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pair_multiply(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PairMulSoA(benchmark::State& state) {
  const auto a = to_soa(sum_of(state.range(0), 1)), b = to_soa(sum_of(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(pair_multiply(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OuterReference(benchmark::State& state) {
  const auto a = sum_of(state.range(0), 3), b = sum_of(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(reference::outer_product(a, b));
}

void BM_OuterSerial(benchmark::State& state) {
  const auto a = sum_of(state.range(0), 3), b = sum_of(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(outer_product(a, b, 1));
}

void BM_OuterParallel(benchmark::State& state) {
  const auto a = sum_of(state.range(0), 3), b = sum_of(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(outer_product(a, b, 0));
}

void BM_OuterParallelSoA(benchmark::State& state) {
  const auto a = to_soa(sum_of(state.range(0), 3)), b = to_soa(sum_of(state.range(0), 4));
  for (auto _ : state) benchmark::DoNotOptimize(outer_product(a, b, 0));
}

void BM_GroupReference(benchmark::State& state) {
  const auto s = sum_of(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(reference::group_greedy(s));
}

void BM_GroupSequential(benchmark::State& state) {
  const auto s = sum_of(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(group_greedy(s));
}

void BM_GroupParallel(benchmark::State& state) {
  const auto s = sum_of(state.range(0), 5);
  const auto chunks = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(group_greedy_parallel(s, chunks));
}

void BM_CliffordAoS(benchmark::State& state) {
  auto s = sum_of(state.range(0), 6);
  std::size_t q = 0;
  for (auto _ : state) {
    apply_clifford(s, CliffordOp::cnot(q % kQubits, (q + 7) % kQubits));
    ++q;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CliffordSoA(benchmark::State& state) {
  auto s = to_soa(sum_of(state.range(0), 6));
  std::size_t q = 0;
  for (auto _ : state) {
    apply_clifford(s, CliffordOp::cnot(q % kQubits, (q + 7) % kQubits));
    ++q;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_PairMulReference)->Arg(100)->Arg(1000);
BENCHMARK(BM_PairMulAoS)->Arg(100)->Arg(1000);
BENCHMARK(BM_PairMulSoA)->Arg(100)->Arg(1000);
BENCHMARK(BM_OuterReference)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OuterSerial)->Arg(25)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OuterParallel)->Arg(25)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OuterParallelSoA)->Arg(25)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupReference)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupSequential)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupParallel)->Args({500, 4})->Args({2000, 4})->Args({2000, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliffordAoS)->Arg(10000);
BENCHMARK(BM_CliffordSoA)->Arg(10000);

BENCHMARK_MAIN();
