// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "simsim/similarity.hpp"

namespace {

using namespace simsim;

void BM_IntertwinerSpace(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    CommutingTuple a = random_commuting_tuple(n, 2, 21, TupleRecipe::PolyInOne);
    Rng rng(22);
    CommutingTuple b = conjugate(a, random_invertible_integer_matrix(n, 3, rng));
    for (auto _ : state) {
        std::vector<Matrix> w = intertwiner_space(a, b);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_IntertwinerSpace)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

void BM_DecideSimilar(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    CommutingTuple a = random_commuting_tuple(n, 2, 23, TupleRecipe::BlockDiag);
    Rng rng(24);
    CommutingTuple b = conjugate(a, random_invertible_integer_matrix(n, 3, rng));
    for (auto _ : state) {
        Verdict v = decide_similarity(a, b, 20, 1000000, 25);
        benchmark::DoNotOptimize(v.kind);
    }
}
BENCHMARK(BM_DecideSimilar)->Arg(3)->Arg(5)->Arg(8);

void BM_SynthesizeFromPair(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    CommutingTuple a = random_commuting_tuple(n, 2, 26, TupleRecipe::Conjugated);
    Rng rng(27);
    Matrix s = random_invertible_integer_matrix(n, 3, rng);
    CommutingTuple b = conjugate(a, s);
    VectorTuple u = find_cyclic_tuple(a, CyclicSearch::Greedy);
    VectorTuple v = apply_to_tuple(s, u);
    for (auto _ : state) {
        SimilarityCertificate cert = synthesize_from_pair(a, u, b, v);
        benchmark::DoNotOptimize(cert.S);
    }
}
BENCHMARK(BM_SynthesizeFromPair)->Arg(3)->Arg(5)->Arg(8);

} // namespace
