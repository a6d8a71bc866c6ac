#include <benchmark/benchmark.h>

#include "fibfield/fibseq.hpp"
#include "fibfield/modarith.hpp"
#include "fibfield/quadext.hpp"
#include "fibfield/theorem.hpp"

using namespace fibfield;

static void BM_Factorize60Bit(benchmark::State& state) {
  u64 n = (u64{1} << 60) + 33;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
    n += 2;
  }
}
BENCHMARK(BM_Factorize60Bit);

static void BM_FactorizeSemiprime(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(factorize(u64{1000003} * 998244353));
}
BENCHMARK(BM_FactorizeSemiprime);

static void BM_MultiplicativeOrder(benchmark::State& state) {
  const u64 p = (u64{1} << 61) - 1;
  const Factorization group = factorize(p - 1);
  u64 a = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplicative_order(Residue(a, Modulus(p)), group));
    ++a;
  }
}
BENCHMARK(BM_MultiplicativeOrder);

static void BM_ExtOrder(benchmark::State& state) {
  const QuadContext ctx = QuadContext::fibonacci(2147483647);  // 2^31 - 1, inert for x^2 - x - 1
  u64 c0 = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext_order(QuadElement(c0++, 1, ctx)));
  }
}
BENCHMARK(BM_ExtOrder);

static void BM_MatOrder(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mat_order(RecurrenceParams::fibonacci(), Modulus(1000000007)));
}
BENCHMARK(BM_MatOrder);

static void BM_OrbitCensus(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_census(p, RecurrenceParams::fibonacci()));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * p * p));
}
BENCHMARK(BM_OrbitCensus)->Arg(101)->Arg(997)->Arg(4093)->Unit(benchmark::kMillisecond);

static void BM_VerifyMain(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_main(p));
}
BENCHMARK(BM_VerifyMain)->Arg(101)->Arg(997)->Unit(benchmark::kMillisecond);

static void BM_VerifyComplementary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_complementary(199));
}
BENCHMARK(BM_VerifyComplementary)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
