#include <benchmark/benchmark.h>

#include "eiscurve/bernoulli.hpp"
#include "eiscurve/series.hpp"

using namespace eiscurve;

static void BM_SeriesMulRational(benchmark::State& state) {
    long prec = state.range(0);
    std::vector<Rational> coeffs(prec);
    for (long i = 0; i < prec; ++i) coeffs[i] = Rational(i + 1, 2 * i + 3);
    TruncatedSeries<Rational> f(coeffs);
    for (auto _ : state) {
        auto g = f * f;
        benchmark::DoNotOptimize(g);
    }
    state.SetComplexityN(prec);
}
BENCHMARK(BM_SeriesMulRational)->Range(32, 512)->Complexity();

static void BM_SeriesInverse(benchmark::State& state) {
    long prec = state.range(0);
    std::vector<Rational> coeffs(prec);
    coeffs[0] = 1;
    for (long i = 1; i < prec; ++i) coeffs[i] = Rational(1, i + 1);
    TruncatedSeries<Rational> f(coeffs);
    for (auto _ : state) {
        auto g = f.inverse();
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_SeriesInverse)->Range(16, 128);

static void BM_BernoulliOracle(benchmark::State& state) {
    long k = state.range(0);
    auto psi = DirichletCharacter::trivial(1);
    for (auto _ : state) {
        auto v = gen_bernoulli_oracle(k, psi);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_BernoulliOracle)->Arg(6)->Arg(12)->Arg(24);
