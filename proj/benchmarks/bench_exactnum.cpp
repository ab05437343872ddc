// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "simsim/rng.hpp"
#include "simsim/tuples.hpp"

namespace {

using namespace simsim;

Matrix random_matrix(std::size_t n, Rng& rng) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = GaussianRational(Rational(rng.uniform(-9, 9), rng.uniform(1, 9)));
    return m;
}

void BM_Rref(benchmark::State& state) {
    Rng rng(1);
    Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        RrefResult r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Determinant(benchmark::State& state) {
    Rng rng(2);
    Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        GaussianRational d = determinant(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Inverse(benchmark::State& state) {
    Rng rng(3);
    Matrix m = random_invertible_integer_matrix(static_cast<std::size_t>(state.range(0)), 9, rng);
    for (auto _ : state) {
        Matrix inv = inverse(m);
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

} // namespace
