// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/similarity.hpp"

#include <cmath>

#include "simsim/krylov.hpp"

namespace simsim {

namespace {

constexpr std::size_t kSymbolicDetMaxN = 4;
constexpr std::size_t kSymbolicDetMaxDim = 6;

void check_pair_shapes(const CommutingTuple& ta, const CommutingTuple& tb) {
    if (ta.arity() != tb.arity()) throw ShapeMismatchError("tuples of unequal arity");
    if (ta.dim() != tb.dim()) throw ShapeMismatchError("tuples of unequal dimension");
}

/// Sparse polynomial in d variables; reused for the symbolic determinant of
/// the generic intertwiner combination.
TermMap poly_mul(const TermMap& a, const TermMap& b, std::size_t vars) {
    TermMap out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m = Monomial::constant(vars);
            for (std::size_t v = 0; v < vars; ++v)
                m.exponents[v] = ma.exponents[v] + mb.exponents[v];
            GaussianRational c = out.count(m) ? out[m] : GaussianRational(0);
            c += ca * cb;
            if (c.is_zero())
                out.erase(m);
            else
                out[m] = c;
        }
    return out;
}

TermMap poly_scale_add(TermMap acc, const TermMap& p, const GaussianRational& sign) {
    for (const auto& [m, c] : p) {
        GaussianRational v = (acc.count(m) ? acc[m] : GaussianRational(0)) + sign * c;
        if (v.is_zero())
            acc.erase(m);
        else
            acc[m] = v;
    }
    return acc;
}

/// Laplace expansion along the first column; n <= 4 keeps this tiny.
TermMap symbolic_det(const std::vector<std::vector<TermMap>>& a, std::size_t vars) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    TermMap det;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][0].empty()) continue;
        std::vector<std::vector<TermMap>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(a[r].begin() + 1, a[r].end());
        }
        TermMap term = poly_mul(a[i][0], symbolic_det(minor, vars), vars);
        det = poly_scale_add(std::move(det), term, GaussianRational(i % 2 == 0 ? 1 : -1));
    }
    return det;
}

} // namespace

SimilarityCertificate synthesize_from_pair(const CommutingTuple& ta, const VectorTuple& u,
                                           const CommutingTuple& tb, const VectorTuple& v) {
    check_pair_shapes(ta, tb);
    const std::size_t n = ta.dim();
    if (!is_cyclic(ta, u)) throw PreconditionFailedError("first tuple is not cyclic for its vectors");
    if (!is_cyclic(tb, v)) throw PreconditionFailedError("second tuple is not cyclic for its vectors");
    ConditionCReport cc = condition_c_check(ta, u, tb, v);
    if (!cc.holds)
        throw PreconditionFailedError("the two annihilators differ", cc.witness);

    // The stacked closure is the graph of the similarity: split its basis
    // into top and bottom halves and solve S * X = Y.
    SubspaceBasis closure = generated_subspace(direct_sum(ta, tb), stack_generators(u, v));
    Matrix x(n, closure.dim()), y(n, closure.dim());
    for (std::size_t t = 0; t < closure.dim(); ++t)
        for (std::size_t i = 0; i < n; ++i) {
            x(i, t) = closure.basis[t][i];
            y(i, t) = closure.basis[t][n + i];
        }
    SimilarityCertificate cert;
    cert.S = y * inverse(x); // x is square and invertible: dim = n by cyclicity
    cert.S_inverse = inverse(cert.S);
    cert.checked = verify_similarity(ta, tb, cert.S);
    if (!cert.checked) throw std::logic_error("synthesized intertwiner failed verification");
    return cert;
}

bool verify_similarity(const CommutingTuple& ta, const CommutingTuple& tb, const Matrix& s) {
    check_pair_shapes(ta, tb);
    if (!s.is_square() || s.rows() != ta.dim()) throw ShapeMismatchError("intertwiner of wrong shape");
    if (determinant(s).is_zero()) return false;
    for (std::size_t l = 0; l < ta.arity(); ++l)
        if (s * ta.matrix(l) != tb.matrix(l) * s) return false;
    return true;
}

std::vector<Matrix> intertwiner_space(const CommutingTuple& ta, const CommutingTuple& tb) {
    check_pair_shapes(ta, tb);
    const std::size_t n = ta.dim();
    const std::size_t m = ta.arity();
    // Unknown S entries s_{pq}, row-major; equations (S A_l - B_l S)_{pq} = 0.
    Matrix sys(m * n * n, n * n);
    for (std::size_t l = 0; l < m; ++l) {
        const Matrix& a = ta.matrix(l);
        const Matrix& b = tb.matrix(l);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                std::size_t row = (l * n + p) * n + q;
                for (std::size_t r = 0; r < n; ++r) {
                    sys(row, p * n + r) += a(r, q);
                    sys(row, r * n + q) -= b(p, r);
                }
            }
    }
    std::vector<Matrix> basis;
    for (const Vector& kv : kernel_basis(sys)) {
        Matrix s(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) s(p, q) = kv[p * n + q];
        basis.push_back(std::move(s));
    }
    return basis;
}

Verdict decide_similarity(const CommutingTuple& ta, const CommutingTuple& tb,
                          std::size_t trials, std::int64_t grid_size, std::uint64_t seed) {
    check_pair_shapes(ta, tb);
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const std::size_t n = ta.dim();
    if (grid_size < static_cast<std::int64_t>(2 * n))
        throw std::invalid_argument("grid_size must be at least 2n");

    std::vector<Matrix> space = intertwiner_space(ta, tb);
    Verdict verdict;
    if (space.empty()) {
        verdict.kind = Verdict::Kind::NotSimilarExact;
        verdict.reason = "no nonzero intertwiner";
        return verdict;
    }

    if (n <= kSymbolicDetMaxN && space.size() <= kSymbolicDetMaxDim) {
        // Small enough to expand det(sum c_i W_i) symbolically: an exact
        // verdict in both directions.
        const std::size_t d = space.size();
        std::vector<std::vector<TermMap>> generic(n, std::vector<TermMap>(n));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t i = 0; i < d; ++i)
                    if (!space[i](p, q).is_zero()) {
                        Monomial mono = Monomial::constant(d).times_var(i);
                        generic[p][q] = poly_scale_add(std::move(generic[p][q]),
                                                       TermMap{{mono, space[i](p, q)}},
                                                       GaussianRational(1));
                    }
        if (symbolic_det(generic, d).empty()) {
            verdict.kind = Verdict::Kind::NotSimilarExact;
            verdict.reason = "every intertwiner is singular";
            return verdict;
        }
    }

    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Matrix s(n, n);
        for (const Matrix& w : space) {
            GaussianRational c(Rational(rng.uniform(1, grid_size)));
            s = s + c * w;
        }
        if (determinant(s).is_zero()) continue;
        SimilarityCertificate cert;
        cert.S = s;
        cert.S_inverse = inverse(s);
        cert.checked = verify_similarity(ta, tb, cert.S);
        if (!cert.checked) throw std::logic_error("sampled intertwiner failed verification");
        verdict.kind = Verdict::Kind::Similar;
        verdict.certificate = std::move(cert);
        return verdict;
    }

    verdict.kind = Verdict::Kind::NotSimilarSampled;
    verdict.reason = "all sampled intertwiner combinations were singular";
    verdict.failure_probability_bound =
        std::pow(static_cast<double>(n) / static_cast<double>(grid_size),
                 static_cast<double>(trials));
    return verdict;
}

CommutingTuple conjugate(const CommutingTuple& t, const Matrix& s) {
    if (!s.is_square() || s.rows() != t.dim()) throw ShapeMismatchError("conjugator of wrong shape");
    Matrix s_inv = inverse(s); // throws SingularMatrixError
    std::vector<Matrix> mats;
    mats.reserve(t.arity());
    for (std::size_t l = 0; l < t.arity(); ++l) mats.push_back(s * t.matrix(l) * s_inv);
    return CommutingTuple(std::move(mats));
}

VectorTuple apply_to_tuple(const Matrix& s, const VectorTuple& u) {
    std::vector<Vector> vs;
    vs.reserve(u.k());
    for (std::size_t j = 0; j < u.k(); ++j) vs.push_back(s.apply(u[j]));
    return VectorTuple(std::move(vs));
}

} // namespace simsim
