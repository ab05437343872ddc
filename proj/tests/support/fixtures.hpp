// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "simsim/matrix.hpp"
#include "simsim/rng.hpp"
#include "simsim/tuples.hpp"

namespace simsim::testing {

/// The worked 2x2 pair: B = S A S^-1 with the S below, yet the standard
/// basis pair separates the two annihilators (via 1 - z).
inline Matrix example_a() { return Matrix{{0, 1}, {0, 0}}; }
inline Matrix example_b() { return Matrix{{-1, 1}, {-1, 1}}; }
inline Matrix example_s() { return Matrix{{-1, 2}, {-1, 1}}; }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

inline Matrix diagonal(std::initializer_list<long> entries) {
    Matrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (long e : entries) {
        m(i, i) = GaussianRational(Rational(e));
        ++i;
    }
    return m;
}

inline Matrix random_integer_matrix(std::size_t rows, std::size_t cols, int bound, Rng& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = GaussianRational(Rational(rng.uniform(-bound, bound)));
    return m;
}

/// Random Gaussian-rational matrix with small integer real/imag parts.
inline Matrix random_gaussian_matrix(std::size_t rows, std::size_t cols, int bound, Rng& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = GaussianRational(Rational(rng.uniform(-bound, bound)),
                                       Rational(rng.uniform(-bound, bound)));
    return m;
}

inline TupleRecipe recipe_by_index(std::size_t i) {
    switch (i % 3) {
        case 0: return TupleRecipe::PolyInOne;
        case 1: return TupleRecipe::BlockDiag;
        default: return TupleRecipe::Conjugated;
    }
}

} // namespace simsim::testing
