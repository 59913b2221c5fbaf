#include <benchmark/benchmark.h>

#include <random>

#include "pmb/basis1d.hpp"
#include "pmb/basis2d.hpp"
#include "pmb/gen_free.hpp"
#include "pmb/rref.hpp"

namespace {

void BM_Rref(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const pmb::Matrix a = pmb::random_invertible(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(pmb::rref(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(2, 32)->Complexity(benchmark::oNCubed);

void BM_Basis1D(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto length = state.range(1);
  const pmb::Module1D m = pmb::gen_free(1, pmb::Window1D{0, length - 1}, std::vector<pmb::Degree1>(dim, 0));
  pmb::OpCount ops;
  for (auto _ : state) {
    ops = {};
    benchmark::DoNotOptimize(pmb::compute_basis_1d(m, &ops));
  }
  state.counters["row_ops"] = static_cast<double>(ops.row_ops);
  state.counters["entry_ops"] = static_cast<double>(ops.entry_ops);
}
BENCHMARK(BM_Basis1D)->ArgsProduct({{2, 4, 8, 16}, {8, 32}});

void BM_Basis2D(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto side = state.range(1);
  const pmb::Module2D m = pmb::gen_free(1, pmb::Window2D{0, side - 1, 0, side - 1},
                                        std::vector<pmb::Degree2>(dim, pmb::Degree2{0, 0}));
  pmb::OpCount ops;
  for (auto _ : state) {
    ops = {};
    benchmark::DoNotOptimize(pmb::compute_basis_2d(m, &ops));
  }
  state.counters["row_ops"] = static_cast<double>(ops.row_ops);
  state.counters["entry_ops"] = static_cast<double>(ops.entry_ops);
}
BENCHMARK(BM_Basis2D)->ArgsProduct({{2, 4, 8}, {3, 6}});

}  // namespace

BENCHMARK_MAIN();
