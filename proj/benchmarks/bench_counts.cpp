#include "legr/augcount.hpp"
#include "legr/dga.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BruteTrivial(benchmark::State& state) {
    std::vector<int> mu{1, 1, 1, 0, 0, 0};
    auto p = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(legr::brute_count_trivial(mu, p, true));
}
BENCHMARK(BM_BruteTrivial)->Arg(2)->Arg(3);

void BM_BruteSixValent(benchmark::State& state) {
    std::vector<int> mu(6, 0);
    for (auto _ : state) benchmark::DoNotOptimize(legr::brute_count_vertex(3, 3, mu, 2));
}
BENCHMARK(BM_BruteSixValent)->Unit(benchmark::kMillisecond);

void BM_FormulaSixValent(benchmark::State& state) {
    std::vector<int> mu(6, 0);
    for (auto _ : state) benchmark::DoNotOptimize(legr::formula_count_vertex(3, 3, mu, 2));
}
BENCHMARK(BM_FormulaSixValent);

void BM_InternalDGA(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> mu(n, 0);
    for (auto _ : state) benchmark::DoNotOptimize(legr::build_internal_dga(0, n, mu));
}
BENCHMARK(BM_InternalDGA)->DenseRange(2, 8, 2);

}  // namespace
