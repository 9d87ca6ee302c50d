#include <benchmark/benchmark.h>

#include "hilb/algebra_io.hpp"
#include "hilb/ring.hpp"

using namespace hilb;

static void BM_EnumerateBasis(benchmark::State& state) {
    FrobeniusAlgebra h = plane_algebra();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(h, n));
}
BENCHMARK(BM_EnumerateBasis)->Arg(4)->Arg(6)->Arg(8);

static void BM_LehnMatrix(benchmark::State& state) {
    FrobeniusAlgebra h = plane_algebra();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix_of<Rational>(h, lehn_op<Rational>(h), n));
}
BENCHMARK(BM_LehnMatrix)->Arg(2)->Arg(3)->Arg(4);

static void BM_SphericalTransport(benchmark::State& state) {
    FrobeniusAlgebra h = point_algebra(Rational(1));
    const int n = static_cast<int>(state.range(0));
    AlgElement<Rational> u = unit_element<Rational>(h);
    FockDescent desc(h, n, n + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(transported_spherical<Rational>(h, desc, u, {{u, 2}}));
}
BENCHMARK(BM_SphericalTransport)->Arg(2)->Arg(3);

static void BM_ChernBlock(benchmark::State& state) {
    FrobeniusAlgebra h = plane_algebra();
    AlgElement<Rational> kc = lift_element<Rational>(h.canonical);
    const int i = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(chern_block<Rational>(h, kc, i, unit_element<Rational>(h), 3));
}
BENCHMARK(BM_ChernBlock)->Arg(0)->Arg(1)->Arg(2);

static void BM_StructureConstants(benchmark::State& state) {
    FrobeniusAlgebra h = point_algebra(Rational(1));
    AlgElement<Rational> kc = lift_element<Rational>(h.canonical);
    const int n = static_cast<int>(state.range(0));
    const int dim = FockBasis::build(h, n).size();
    for (auto _ : state) {
        MatrixSpan<Rational> span = algebra_span(chern_route_ops<Rational>(h, kc, 2, n), dim);
        benchmark::DoNotOptimize(structure_constants(h, span, n));
    }
}
BENCHMARK(BM_StructureConstants)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
