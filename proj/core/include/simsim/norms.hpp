// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "simsim/similarity.hpp"
#include "simsim/tuples.hpp"

namespace simsim {

/// Dense complex matrix in doubles, for norm computations only. Every
/// decision that matters stays in the exact modules; this one reports sizes.
struct FloatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<double>> a;

    FloatMatrix() = default;
    FloatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    std::complex<double>& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

FloatMatrix to_float(const Matrix& m);
std::vector<std::complex<double>> to_float(const Vector& v);
double euclidean_norm(const std::vector<std::complex<double>>& v);

/// Largest singular value by power iteration on M^H M, converged to the
/// given relative tolerance. Deterministic: iterates from the all-ones
/// vector and from each standard basis vector, reporting the largest limit
/// (a lone start can be exactly orthogonal to the top singular space).
double spectral_norm(const FloatMatrix& m, double tolerance = 1e-12);
double spectral_norm(const Matrix& m, double tolerance = 1e-12);

/// The similarity constant c = max(norm(S), norm(S^-1)) for the synthesized
/// intertwiner, plus both norms. The ratio range is filled in by sampling
/// drivers, not here.
struct NormReport {
    double c = 0.0;
    double norm_S = 0.0;
    double norm_S_inverse = 0.0;
    std::optional<std::pair<double, double>> sampled_ratio_range;
};

/// Synthesizes the intertwiner exactly, then reports its float norms.
/// Propagates PreconditionFailedError from the synthesis.
NormReport optimal_constant(const CommutingTuple& ta, const VectorTuple& u,
                            const CommutingTuple& tb, const VectorTuple& v,
                            double tolerance = 1e-12);

struct InequalitySampleResult {
    bool passed = false;
    /// max over samples of max(r, 1/r) where r = norm(A side) / norm(B side);
    /// infinite when exactly one side vanished on some sample.
    double worst_ratio = 0.0;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    std::size_t evaluated = 0; // samples actually scored (both-zero draws skipped)
};

/// Draws random sparse polynomial tuples (integer coefficients in [-5, 5],
/// total degree <= max_degree), evaluates both sides exactly, and checks
///   norm(A side) <= c * norm(B side)  and  norm(B side) <= c * norm(A side)
/// with relative slack 1e-9. Draws where both sides vanish are skipped.
InequalitySampleResult inequality_sample_test(const CommutingTuple& ta, const VectorTuple& u,
                                              const CommutingTuple& tb, const VectorTuple& v,
                                              double c, std::size_t samples,
                                              unsigned max_degree, std::uint64_t seed);

/// One row of the truncated Hardy-shift table: the degree-(n-1) truncation
/// of multiplication by z against the same truncation of multiplication by
/// 2z, generated by the constant function.
struct HardyRow {
    std::size_t n = 0;
    bool condition_c_holds = false;
    double c_n = 0.0;
    double lower_bound = 0.0; // 2^j for the top power j with J^j != 0
};

/// Rows for n = 2..n_max. The constants grow like 2^(n-1): the finite
/// shadow of the fact that the untruncated shifts are not similar.
std::vector<HardyRow> hardy_truncation_demo(std::size_t n_max);

/// The n-dimensional nilpotent lower shift (J e_i = e_{i+1}, J e_n = 0).
Matrix shift_matrix(std::size_t n);

} // namespace simsim
