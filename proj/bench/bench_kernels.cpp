// OpenMP kernels against their single-threaded references.

#include <benchmark/benchmark.h>

#include "strata/commutant.hpp"
#include "strata/factory.hpp"
#include "strata/sweep.hpp"
#include "strata/tangent_oracle.hpp"

namespace {

Eigen::MatrixXcd jordan_of_order(int n) {
  const strata::JordanStructure js({{(n + 1) / 2, n / 2}});
  return strata::make_jordan(js, strata::SpectrumSpec({0.5}, strata::SpectrumKind::Real));
}

void BM_CommutationOperator(benchmark::State& state) {
  const auto j = jordan_of_order(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strata::commutation_operator(j));
}

void BM_CommutationOperatorSerial(benchmark::State& state) {
  const auto j = jordan_of_order(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strata::commutation_operator_serial(j));
}

strata::MultiplicityProfile profile_of_order(int n) {
  strata::Partition parts{n / 2};
  parts.resize(n - n / 2 + 1, 1);
  return strata::MultiplicityProfile(parts);
}

void BM_Differential(benchmark::State& state) {
  const auto p = profile_of_order(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        strata::assemble_differential_matrix(strata::MatrixClass::DiagonalizableComplex, p, 1));
  }
}

void BM_DifferentialSerial(benchmark::State& state) {
  const auto p = profile_of_order(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        strata::assemble_differential_serial(strata::MatrixClass::DiagonalizableComplex, p, 1));
  }
}

strata::RunConfig sweep_config(int max_n) {
  strata::RunConfig config;
  config.max_n = max_n;
  config.max_m = max_n;
  config.trials = 2;
  return config;
}

void BM_Sweep(benchmark::State& state) {
  const auto config = sweep_config(static_cast<int>(state.range(0)));
  const auto cases = strata::build_sweep(strata::parse_scope("all"), config);
  for (auto _ : state) benchmark::DoNotOptimize(strata::run_sweep(cases, config));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto config = sweep_config(static_cast<int>(state.range(0)));
  const auto cases = strata::build_sweep(strata::parse_scope("all"), config);
  for (auto _ : state) benchmark::DoNotOptimize(strata::run_sweep_serial(cases, config));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

}  // namespace

BENCHMARK(BM_CommutationOperator)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_CommutationOperatorSerial)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_Differential)->Arg(6)->Arg(10);
BENCHMARK(BM_DifferentialSerial)->Arg(6)->Arg(10);
BENCHMARK(BM_Sweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
