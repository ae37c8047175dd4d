#include "legr/dsl.hpp"
#include "legr/rulings.hpp"

#include <benchmark/benchmark.h>

namespace {

const char* lambda_src = "tangle lambda { left 0 [] L 1 1 L 2 1 L 3 1 V 4 3 3 [0,0,0] R 3 bp R 2 bp R 1 bp }";

void BM_LambdaPolynomial(benchmark::State& state) {
    legr::FrontDiagram d = legr::parse(lambda_src);
    for (auto _ : state) benchmark::DoNotOptimize(legr::total_ruling_polynomial(d));
}
BENCHMARK(BM_LambdaPolynomial);

// k degree-0 crossings between two stacked unknots, closed up by cusps
void BM_TwistKnot(benchmark::State& state) {
    legr::FrontDiagram d;
    d.events.push_back(legr::SliceEvent::left_cusp(1, 1));
    d.events.push_back(legr::SliceEvent::left_cusp(3, 0));
    for (int k = 0; k < state.range(0); ++k) d.events.push_back(legr::SliceEvent::crossing(2));
    d.events.push_back(legr::SliceEvent::right_cusp(1, true));
    d.events.push_back(legr::SliceEvent::right_cusp(1, true));
    for (auto _ : state) benchmark::DoNotOptimize(legr::total_ruling_polynomial(d));
}
// the number of rulings grows exponentially with k
BENCHMARK(BM_TwistKnot)->DenseRange(4, 20, 4);

void BM_VertexRulings(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> mu(n, 0);
    for (auto _ : state) benchmark::DoNotOptimize(legr::enumerate_vertex_rulings(n / 2, n - n / 2, mu));
}
BENCHMARK(BM_VertexRulings)->DenseRange(2, 10, 2);

}  // namespace
