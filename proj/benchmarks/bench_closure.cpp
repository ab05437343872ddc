// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "simsim/annihilator.hpp"
#include "simsim/krylov.hpp"

namespace {

using namespace simsim;

void BM_GeneratedSubspace(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    CommutingTuple t = random_commuting_tuple(n, 2, 7, TupleRecipe::Conjugated);
    VectorTuple u = VectorTuple::standard_basis(n);
    for (auto _ : state) {
        SubspaceBasis s = generated_subspace(t, u);
        benchmark::DoNotOptimize(s.basis);
    }
}
BENCHMARK(BM_GeneratedSubspace)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_ConditionC(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    CommutingTuple a = random_commuting_tuple(n, 2, 11, TupleRecipe::BlockDiag);
    CommutingTuple b = random_commuting_tuple(n, 2, 12, TupleRecipe::BlockDiag);
    VectorTuple u = VectorTuple::standard_basis(n);
    for (auto _ : state) {
        ConditionCReport r = condition_c_check(a, u, b, u);
        benchmark::DoNotOptimize(r.holds);
    }
}
BENCHMARK(BM_ConditionC)->Arg(4)->Arg(8)->Arg(16);

void BM_AnnihilatorBasis(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    CommutingTuple t = random_commuting_tuple(n, 2, 13, TupleRecipe::PolyInOne);
    VectorTuple u({VectorTuple::standard_basis(n)[0]});
    for (auto _ : state) {
        std::vector<PolyVector> basis = annihilator_basis(t, u, 4);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_AnnihilatorBasis)->Arg(4)->Arg(8)->Arg(12);

} // namespace
