#include <benchmark/benchmark.h>

#include "eiscurve/hecke.hpp"
#include "eiscurve/qexpansion.hpp"

using namespace eiscurve;

static void BM_E2Series(benchmark::State& state) {
    long prec = state.range(0);
    for (auto _ : state) {
        auto f = e2_series(prec);
        benchmark::DoNotOptimize(f);
    }
    state.SetComplexityN(prec);
}
BENCHMARK(BM_E2Series)->Range(128, 2048)->Complexity();

static void BM_EisensteinNontrivial(benchmark::State& state) {
    long prec = state.range(0);
    auto chars = characters_mod(5);
    auto chi = chars[1];  // order 4, primitive
    auto psi = DirichletCharacter::trivial(1);
    for (auto _ : state) {
        auto f = eisenstein_series(1, chi, psi, prec);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_EisensteinNontrivial)->Range(64, 512);

static void BM_EigensystemVerify(benchmark::State& state) {
    long prec = state.range(0);
    auto f = critical_refinement(ordinary_refinement(e2_series(prec), 7), 5);
    auto sys = EigenSystem::critical_ordinary_e2(5, 7, 50);
    for (auto _ : state) {
        auto report = eigensystem_verify(f, sys);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_EigensystemVerify)->Arg(300)->Arg(600);
