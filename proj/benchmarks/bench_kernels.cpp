#include <benchmark/benchmark.h>

#include "ehz/genfun.hpp"

using namespace ehz;

namespace {

LatticePolytope figP() {
    return make_polytope({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(2), Int(1)}});
}

LatticePolytope cube4() {
    std::vector<std::vector<Int>> verts;
    for (long mask = 0; mask < 16; ++mask) {
        std::vector<Int> v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1;
        verts.push_back(v);
    }
    return make_polytope(std::move(verts));
}

void BM_sublattice_enumeration(benchmark::State& state) {
    int n = state.range(0);
    long e = state.range(1);
    for (auto _ : state) {
        long count = 0;
        sublattices_p_index(n, Int(2), e, [&](const PLattice&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_sublattice_enumeration)->Args({2, 4})->Args({3, 4})->Args({4, 3});

void BM_snf_3x3(benchmark::State& state) {
    IntMatrix m = IntMatrix::from_rows({{Int(4), Int(7), Int(2)},
                                        {Int(0), Int(6), Int(9)},
                                        {Int(1), Int(3), Int(8)}});
    for (auto _ : state) {
        auto d = snf(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_snf_3x3);

void BM_count_points(benchmark::State& state) {
    LatticePolytope P = cube4();
    HRep H = hrep(P);
    Lat L{4, IntMatrix::identity(4), Int(3)}; // dense superlattice
    for (auto _ : state) {
        Int c = count_points(P, H, state.range(0), L);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_count_points)->Arg(2)->Arg(5);

void BM_typeC_cosets(benchmark::State& state) {
    for (auto _ : state) {
        CosetSet cs = typeC_cosets(2, Int(state.range(0)), 1);
        benchmark::DoNotOptimize(cs.size());
    }
}
BENCHMARK(BM_typeC_cosets)->Arg(2)->Arg(3);

void BM_hecke_act(benchmark::State& state) {
    CosetSet cs = typeC_cosets(1, Int(2), 0);
    LatticePolytope P = figP();
    for (auto _ : state) {
        UniPoly f = hecke_act(cs, P);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_hecke_act);

void BM_series_expand_W3(benchmark::State& state) {
    RationalFunction w = reference_zeta_C(3, 2);
    for (auto _ : state) {
        MultiPoly s = series_expand(w, {"Y"}, 4);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_series_expand_W3);

} // namespace

BENCHMARK_MAIN();
