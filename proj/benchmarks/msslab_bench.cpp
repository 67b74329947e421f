#include <benchmark/benchmark.h>

#include "msslab/granulation.hpp"
#include "msslab/mss.hpp"
#include "msslab/validation.hpp"

namespace {

using namespace msslab;

MssStructure chain_structure(std::size_t n, DeltaKind kind) {
  BinaryRelation r(n);
  for (std::size_t i = 0; i + 1 < n; ++i) r.insert(i, i + 1);
  const Granulation g = predecessor_granulation(close_relation(r, {true, true, false}));
  const OperatorSuite ops = OperatorSuite::granular(g);
  MssComponents c = MssComponents::standard(Universe::numbered(n));
  c.operators = ops;
  c.granulation = g;
  c.delta = DeltaPredicate::builtin(kind, n, &ops);
  return assemble(std::move(c));
}

void BM_Granulation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinaryRelation r = BinaryRelation::full(n);
  for (auto _ : state) benchmark::DoNotOptimize(predecessor_granulation(r));
}
BENCHMARK(BM_Granulation)->Arg(8)->Arg(32)->Arg(64);

void BM_Approximations(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OperatorSuite ops = *chain_structure(n, DeltaKind::E1).operators();
  std::uint64_t bits = 0x5555555555555555ULL & full_mask(n);
  for (auto _ : state) {
    const Subset a(n, bits);
    benchmark::DoNotOptimize(ops.lower(a));
    benchmark::DoNotOptimize(ops.upper(a));
    bits = (bits * 6364136223846793005ULL + 1) & full_mask(n);
  }
}
BENCHMARK(BM_Approximations)->Arg(8)->Arg(64);

void BM_Coherence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MssStructure s = chain_structure(n, DeltaKind::UE1);
  CheckOptions opt;
  opt.jobs = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_coherence(*s.delta(), CoherenceAxiom::NCoh, opt));
}
BENCHMARK(BM_Coherence)->Args({4, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_FullBattery(benchmark::State& state) {
  const MssStructure s = chain_structure(4, DeltaKind::E1);
  for (auto _ : state) benchmark::DoNotOptimize(verify(s));
}
BENCHMARK(BM_FullBattery)->Unit(benchmark::kMillisecond);

void BM_ValidityGrades(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OperatorSuite ops = *chain_structure(n, DeltaKind::E1).operators();
  const Subset c(n, 0b1011);
  for (auto _ : state) benchmark::DoNotOptimize(validity_grades(c, ops));
}
BENCHMARK(BM_ValidityGrades)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
