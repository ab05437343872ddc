// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace simsim {

namespace {

constexpr double kRelativeSlack = 1e-9;
constexpr std::size_t kMaxPowerIterations = 100000;
constexpr int kSampleCoeffBound = 5;
constexpr std::size_t kMaxTermsPerComponent = 3;

std::vector<std::complex<double>> apply_float(const FloatMatrix& m,
                                              const std::vector<std::complex<double>>& v) {
    std::vector<std::complex<double>> out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<std::complex<double>> apply_adjoint_float(const FloatMatrix& m,
                                                      const std::vector<std::complex<double>>& v) {
    std::vector<std::complex<double>> out(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) acc += std::conj(m(i, j)) * v[i];
        out[j] = acc;
    }
    return out;
}

double power_iterate(const FloatMatrix& m, std::vector<std::complex<double>> v, double tolerance) {
    double nv = euclidean_norm(v);
    if (nv == 0.0) return -1.0;
    for (auto& x : v) x /= nv;
    double sigma_prev = -1.0;
    for (std::size_t it = 0; it < kMaxPowerIterations; ++it) {
        std::vector<std::complex<double>> w = apply_float(m, v);
        double sigma = euclidean_norm(w);
        if (sigma == 0.0) return -1.0; // start vector lies in the kernel
        std::vector<std::complex<double>> z = apply_adjoint_float(m, w);
        double nz = euclidean_norm(z);
        if (nz == 0.0) return sigma;
        for (std::size_t j = 0; j < z.size(); ++j) v[j] = z[j] / nz;
        if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= tolerance * sigma) return sigma;
        sigma_prev = sigma;
    }
    return sigma_prev;
}

} // namespace

FloatMatrix to_float(const Matrix& m) {
    FloatMatrix f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = m(i, j).to_complex();
    return f;
}

std::vector<std::complex<double>> to_float(const Vector& v) {
    std::vector<std::complex<double>> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_complex();
    return out;
}

double euclidean_norm(const std::vector<std::complex<double>>& v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

double spectral_norm(const FloatMatrix& m, double tolerance) {
    if (tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (m.rows == 0 || m.cols == 0) return 0.0;
    // A single fixed start can be exactly orthogonal to the top singular
    // space (integer matrices produce no rounding noise to escape it), so
    // iterate from all-ones and from every standard basis vector and keep
    // the largest limit. Some basis vector always has a top component.
    std::vector<std::complex<double>> start(m.cols, std::complex<double>(1.0, 0.0));
    double sigma = power_iterate(m, start, tolerance);
    for (std::size_t i = 0; i < m.cols; ++i) {
        std::vector<std::complex<double>> e(m.cols, 0.0);
        e[i] = 1.0;
        sigma = std::max(sigma, power_iterate(m, e, tolerance));
    }
    return sigma < 0.0 ? 0.0 : sigma;
}

double spectral_norm(const Matrix& m, double tolerance) {
    return spectral_norm(to_float(m), tolerance);
}

NormReport optimal_constant(const CommutingTuple& ta, const VectorTuple& u,
                            const CommutingTuple& tb, const VectorTuple& v, double tolerance) {
    SimilarityCertificate cert = synthesize_from_pair(ta, u, tb, v);
    NormReport report;
    report.norm_S = spectral_norm(cert.S, tolerance);
    report.norm_S_inverse = spectral_norm(cert.S_inverse, tolerance);
    report.c = std::max(report.norm_S, report.norm_S_inverse);
    return report;
}

namespace {

/// Sparse random polynomial tuple: up to a few terms per component, integer
/// coefficients in [-bound, bound] \ {0}, exponents rejected above the
/// degree cap.
PolyVector random_poly_vector(std::size_t k, std::size_t vars, unsigned max_degree, Rng& rng) {
    PolyVector p(k, vars);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t terms = static_cast<std::size_t>(rng.uniform(0, kMaxTermsPerComponent));
        for (std::size_t t = 0; t < terms; ++t) {
            Monomial mono = Monomial::constant(vars);
            for (;;) {
                for (std::size_t l = 0; l < vars; ++l)
                    mono.exponents[l] = static_cast<unsigned>(rng.uniform(0, max_degree));
                if (mono.total_degree() <= max_degree) break;
            }
            long c = rng.uniform(1, kSampleCoeffBound);
            if (rng.uniform(0, 1) == 0) c = -c;
            p.set_term(j, mono, GaussianRational(Rational(c)));
        }
    }
    return p;
}

} // namespace

InequalitySampleResult inequality_sample_test(const CommutingTuple& ta, const VectorTuple& u,
                                              const CommutingTuple& tb, const VectorTuple& v,
                                              double c, std::size_t samples,
                                              unsigned max_degree, std::uint64_t seed) {
    if (c < 1.0) throw std::invalid_argument("constant must be at least 1");
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (u.k() != v.k()) throw ShapeMismatchError("vector tuples of unequal length");

    Rng rng(seed);
    InequalitySampleResult res;
    res.passed = true;
    const std::size_t max_draws = samples * 10;
    for (std::size_t draw = 0; draw < max_draws && res.evaluated < samples; ++draw) {
        PolyVector p = random_poly_vector(u.k(), ta.arity(), max_degree, rng);
        Vector side_a = evaluate(ta, u, p);
        Vector side_b = evaluate(tb, v, p);
        bool zero_a = is_zero_vector(side_a);
        bool zero_b = is_zero_vector(side_b);
        if (zero_a && zero_b) continue;
        ++res.evaluated;
        if (zero_a != zero_b) {
            // One side vanished: no finite constant can bound the ratio.
            res.passed = false;
            res.worst_ratio = std::numeric_limits<double>::infinity();
            double r = zero_b ? std::numeric_limits<double>::infinity() : 0.0;
            if (res.evaluated == 1) {
                res.ratio_min = res.ratio_max = r;
            } else {
                res.ratio_min = std::min(res.ratio_min, r);
                res.ratio_max = std::max(res.ratio_max, r);
            }
            continue;
        }
        double na = euclidean_norm(to_float(side_a));
        double nb = euclidean_norm(to_float(side_b));
        double r = na / nb;
        if (res.evaluated == 1) {
            res.ratio_min = res.ratio_max = r;
        } else {
            res.ratio_min = std::min(res.ratio_min, r);
            res.ratio_max = std::max(res.ratio_max, r);
        }
        double worst = std::max(r, 1.0 / r);
        res.worst_ratio = std::max(res.worst_ratio, worst);
        if (na > c * nb * (1.0 + kRelativeSlack) || nb > c * na * (1.0 + kRelativeSlack))
            res.passed = false;
    }
    return res;
}

Matrix shift_matrix(std::size_t n) {
    Matrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i + 1, i) = 1;
    return j;
}

std::vector<HardyRow> hardy_truncation_demo(std::size_t n_max) {
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    std::vector<HardyRow> rows;
    for (std::size_t n = 2; n <= n_max; ++n) {
        Matrix j = shift_matrix(n);
        CommutingTuple a({j});
        CommutingTuple b({GaussianRational(2) * j});
        Vector e1(n);
        e1[0] = 1;
        VectorTuple u({e1});

        HardyRow row;
        row.n = n;
        row.condition_c_holds = condition_c_check(a, u, b, u).holds;
        row.c_n = optimal_constant(a, u, b, u).c;

        // Top surviving power of the truncated shift: the iteration argument
        // 2^t J^t = S J^t S^-1 forces norm(S) norm(S^-1) >= 2^t while J^t != 0.
        Matrix power = Matrix::identity(n);
        unsigned top = 0;
        for (unsigned t = 1; t < n; ++t) {
            power = power * j;
            if (power.is_zero()) break;
            top = t;
        }
        row.lower_bound = std::ldexp(1.0, static_cast<int>(top));
        rows.push_back(row);
    }
    return rows;
}

} // namespace simsim
