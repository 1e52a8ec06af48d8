#include <benchmark/benchmark.h>

#include "eiscurve/btree.hpp"

using namespace eiscurve;

namespace {

MatrixRep worked_example() {
    MatrixRep rep;
    rep.p = 3;
    Mat2 m1 = Mat2::identity();
    m1.e[0][1] = 1;
    Mat2 m2 = Mat2::identity();
    m2.e[1][0] = 3;
    rep.generators = {m1, m2};
    rep.labels = {"M1", "M2"};
    return rep;
}

}  // namespace

static void BM_StableSetBFS(benchmark::State& state) {
    MatrixRep rep = worked_example();
    long cap = state.range(0);
    for (auto _ : state) {
        auto set = stable_set(rep, cap);
        benchmark::DoNotOptimize(set);
    }
}
BENCHMARK(BM_StableSetBFS)->Arg(4)->Arg(6)->Arg(8);

static void BM_NeighborsEnumeration(benchmark::State& state) {
    long p = state.range(0);
    LatticeVertex v(p, 2, 1, 0);
    for (auto _ : state) {
        auto ns = neighbors(v);
        benchmark::DoNotOptimize(ns);
    }
}
BENCHMARK(BM_NeighborsEnumeration)->Arg(2)->Arg(5)->Arg(13);

static void BM_ReducibilityIndexCheck(benchmark::State& state) {
    MatrixRep rep = worked_example();
    long words = state.range(0);
    std::vector<Integer> trivial = {1, 1};
    for (auto _ : state) {
        bool pass = reducibility_index_check(rep, trivial, trivial, 1, words);
        benchmark::DoNotOptimize(pass);
    }
}
BENCHMARK(BM_ReducibilityIndexCheck)->Arg(4)->Arg(6);
