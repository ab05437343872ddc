// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "simsim/matrix.hpp"
#include "simsim/rng.hpp"

namespace simsim {

/// Power product z_1^a_1 ... z_m^a_m.
struct Monomial {
    std::vector<unsigned> exponents;

    static Monomial constant(std::size_t vars) { return Monomial{std::vector<unsigned>(vars, 0)}; }

    std::size_t vars() const { return exponents.size(); }
    unsigned total_degree() const;
    bool is_constant() const { return total_degree() == 0; }
    /// This monomial times z_var.
    Monomial times_var(std::size_t var) const;

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Graded lexicographic order: total degree first, exponents lexicographic
/// as tie break. The canonical term order for all listings and bases.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, GaussianRational, GradedLexLess>;

/// Tuple (p_1, ..., p_k) of polynomials in m variables, each stored as a
/// sparse monomial -> coefficient map with no zero coefficients.
class PolyVector {
public:
    PolyVector(std::size_t k, std::size_t vars) : vars_(vars), comps_(k) {}

    static PolyVector zero(std::size_t k, std::size_t vars) { return PolyVector(k, vars); }

    std::size_t k() const { return comps_.size(); }
    std::size_t vars() const { return vars_; }
    const TermMap& component(std::size_t j) const { return comps_[j]; }

    GaussianRational coeff(std::size_t j, const Monomial& mono) const;
    /// Sets the coefficient of mono in component j; erases the term when c = 0.
    void set_term(std::size_t j, const Monomial& mono, const GaussianRational& c);
    void add_term(std::size_t j, const Monomial& mono, const GaussianRational& c);

    bool is_zero() const;
    /// Max total degree over all stored terms; 0 for the zero tuple.
    unsigned total_degree() const;
    std::size_t term_count() const;

    PolyVector scaled(const GaussianRational& c) const;
    friend PolyVector operator+(const PolyVector& a, const PolyVector& b);
    /// z_var * P, the module action used throughout.
    PolyVector shifted_by_var(std::size_t var) const;

    friend bool operator==(const PolyVector& a, const PolyVector& b) = default;

private:
    std::size_t vars_;
    std::vector<TermMap> comps_;
};

/// k-tuple of vectors in C^n.
class VectorTuple {
public:
    explicit VectorTuple(std::vector<Vector> vectors);

    std::size_t k() const { return vectors_.size(); }
    std::size_t dim() const { return vectors_.empty() ? 0 : vectors_.front().size(); }
    const Vector& operator[](std::size_t j) const { return vectors_[j]; }
    const std::vector<Vector>& vectors() const { return vectors_; }

    static VectorTuple standard_basis(std::size_t n);

    friend bool operator==(const VectorTuple& a, const VectorTuple& b) = default;

private:
    std::vector<Vector> vectors_;
};

/// m-tuple of pairwise commuting n x n matrices. Commutativity is validated
/// eagerly at construction; everything downstream relies on it.
class CommutingTuple {
public:
    explicit CommutingTuple(std::vector<Matrix> matrices);

    std::size_t dim() const { return n_; }    // n, the ambient dimension
    std::size_t arity() const { return matrices_.size(); } // m
    const Matrix& matrix(std::size_t l) const { return matrices_[l]; }
    const std::vector<Matrix>& matrices() const { return matrices_; }

    Vector apply(std::size_t l, const Vector& v) const { return matrices_[l].apply(v); }

    friend bool operator==(const CommutingTuple& a, const CommutingTuple& b) = default;

private:
    std::size_t n_;
    std::vector<Matrix> matrices_;
};

/// blockdiag of two tuples of equal arity, acting on the direct sum space.
CommutingTuple direct_sum(const CommutingTuple& a, const CommutingTuple& b);

/// Sum over j of p_j(A_1,...,A_m) u_j, computed exactly. Monomials are
/// applied factor by factor to the vector; no matrix power is ever formed.
Vector evaluate(const CommutingTuple& t, const VectorTuple& u, const PolyVector& p);

/// Stacks (u_j ; v_j); both tuples must have the same k.
VectorTuple stack_generators(const VectorTuple& u, const VectorTuple& v);

enum class TupleRecipe {
    PolyInOne,   // each A_i = q_i(M) for one random integer matrix M
    BlockDiag,   // direct sum of two smaller recipes
    Conjugated,  // recipe output conjugated by a random invertible matrix
};

/// Deterministic test-data generator; the result always passes the
/// commutativity check by construction.
CommutingTuple random_commuting_tuple(std::size_t n, std::size_t m, std::uint64_t seed,
                                      TupleRecipe recipe);

/// Integer-entry matrix with entries in [-bound, bound] and nonzero
/// determinant (resampled until invertible).
Matrix random_invertible_integer_matrix(std::size_t n, int bound, Rng& rng);

} // namespace simsim
