// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/tuples.hpp"

#include <numeric>

namespace simsim {

unsigned Monomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Monomial Monomial::times_var(std::size_t var) const {
    Monomial m = *this;
    ++m.exponents.at(var);
    return m;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
}

GaussianRational PolyVector::coeff(std::size_t j, const Monomial& mono) const {
    auto it = comps_.at(j).find(mono);
    return it == comps_.at(j).end() ? GaussianRational(0) : it->second;
}

void PolyVector::set_term(std::size_t j, const Monomial& mono, const GaussianRational& c) {
    if (mono.vars() != vars_) throw ShapeMismatchError("monomial variable count mismatch");
    if (c.is_zero())
        comps_.at(j).erase(mono);
    else
        comps_.at(j)[mono] = c;
}

void PolyVector::add_term(std::size_t j, const Monomial& mono, const GaussianRational& c) {
    set_term(j, mono, coeff(j, mono) + c);
}

bool PolyVector::is_zero() const {
    for (const TermMap& t : comps_)
        if (!t.empty()) return false;
    return true;
}

unsigned PolyVector::total_degree() const {
    unsigned d = 0;
    for (const TermMap& t : comps_)
        if (!t.empty()) d = std::max(d, t.rbegin()->first.total_degree());
    return d;
}

std::size_t PolyVector::term_count() const {
    std::size_t c = 0;
    for (const TermMap& t : comps_) c += t.size();
    return c;
}

PolyVector PolyVector::scaled(const GaussianRational& c) const {
    PolyVector out(k(), vars_);
    if (c.is_zero()) return out;
    for (std::size_t j = 0; j < k(); ++j)
        for (const auto& [mono, a] : comps_[j]) out.set_term(j, mono, c * a);
    return out;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
    if (a.k() != b.k() || a.vars_ != b.vars_) throw ShapeMismatchError("poly tuple shape mismatch");
    PolyVector out = a;
    for (std::size_t j = 0; j < b.k(); ++j)
        for (const auto& [mono, c] : b.comps_[j]) out.add_term(j, mono, c);
    return out;
}

PolyVector PolyVector::shifted_by_var(std::size_t var) const {
    PolyVector out(k(), vars_);
    for (std::size_t j = 0; j < k(); ++j)
        for (const auto& [mono, c] : comps_[j]) out.set_term(j, mono.times_var(var), c);
    return out;
}

VectorTuple::VectorTuple(std::vector<Vector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw ShapeMismatchError("empty vector tuple");
    for (const Vector& v : vectors_)
        if (v.size() != vectors_.front().size())
            throw ShapeMismatchError("vector tuple entries of unequal length");
}

VectorTuple VectorTuple::standard_basis(std::size_t n) {
    std::vector<Vector> vs(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i) vs[i][i] = 1;
    return VectorTuple(std::move(vs));
}

CommutingTuple::CommutingTuple(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw ShapeMismatchError("tuple needs at least one matrix");
    n_ = matrices_.front().rows();
    if (n_ == 0) throw ShapeMismatchError("tuple of empty matrices");
    for (const Matrix& a : matrices_)
        if (!a.is_square() || a.rows() != n_)
            throw ShapeMismatchError("tuple matrices must be square and of equal size");
    for (std::size_t i = 0; i + 1 < matrices_.size(); ++i)
        for (std::size_t j = i + 1; j < matrices_.size(); ++j)
            if (matrices_[i] * matrices_[j] != matrices_[j] * matrices_[i])
                throw NotCommutingError(i, j);
}

CommutingTuple direct_sum(const CommutingTuple& a, const CommutingTuple& b) {
    if (a.arity() != b.arity()) throw ShapeMismatchError("direct sum of tuples of unequal arity");
    std::vector<Matrix> mats;
    mats.reserve(a.arity());
    for (std::size_t l = 0; l < a.arity(); ++l) mats.push_back(direct_sum(a.matrix(l), b.matrix(l)));
    return CommutingTuple(std::move(mats));
}

Vector evaluate(const CommutingTuple& t, const VectorTuple& u, const PolyVector& p) {
    if (p.k() != u.k()) throw ShapeMismatchError("polynomial tuple and vector tuple lengths differ");
    if (p.vars() != t.arity()) throw ShapeMismatchError("polynomial variable count differs from tuple arity");
    if (u.dim() != t.dim()) throw ShapeMismatchError("vector tuple dimension differs from tuple dimension");
    Vector acc(t.dim());
    for (std::size_t j = 0; j < p.k(); ++j) {
        for (const auto& [mono, c] : p.component(j)) {
            Vector w = u[j];
            for (std::size_t l = 0; l < mono.vars(); ++l)
                for (unsigned e = 0; e < mono.exponents[l]; ++e) w = t.apply(l, w);
            for (std::size_t i = 0; i < acc.size(); ++i)
                if (!w[i].is_zero()) acc[i] += c * w[i];
        }
    }
    return acc;
}

VectorTuple stack_generators(const VectorTuple& u, const VectorTuple& v) {
    if (u.k() != v.k()) throw ShapeMismatchError("vector tuples of unequal length");
    std::vector<Vector> ws;
    ws.reserve(u.k());
    for (std::size_t j = 0; j < u.k(); ++j) {
        Vector w = u[j];
        w.insert(w.end(), v[j].begin(), v[j].end());
        ws.push_back(std::move(w));
    }
    return VectorTuple(std::move(ws));
}

namespace {

Matrix random_integer_matrix(std::size_t n, int bound, Rng& rng) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = GaussianRational(Rational(rng.uniform(-bound, bound)));
    return m;
}

/// q(M) for integer polynomial q, by Horner's rule on matrices.
Matrix integer_poly_of_matrix(const Matrix& m, const std::vector<long>& coeffs) {
    std::size_t n = m.rows();
    Matrix acc(n, n);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += GaussianRational(Rational(*it));
    }
    return acc;
}

std::vector<Matrix> poly_in_one_matrices(std::size_t n, std::size_t m, Rng& rng) {
    Matrix base = random_integer_matrix(n, 2, rng);
    unsigned max_deg = static_cast<unsigned>(std::min<std::size_t>(n - 1, 3));
    std::vector<Matrix> mats;
    mats.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<long> coeffs(max_deg + 1);
        for (long& c : coeffs) c = rng.uniform(-2, 2);
        mats.push_back(integer_poly_of_matrix(base, coeffs));
    }
    return mats;
}

std::vector<Matrix> recipe_matrices(std::size_t n, std::size_t m, Rng& rng, TupleRecipe recipe) {
    switch (recipe) {
        case TupleRecipe::PolyInOne:
            return poly_in_one_matrices(n, m, rng);
        case TupleRecipe::BlockDiag: {
            if (n < 2) return poly_in_one_matrices(n, m, rng);
            std::size_t n1 = n / 2;
            std::vector<Matrix> top = poly_in_one_matrices(n1, m, rng);
            std::vector<Matrix> bot = poly_in_one_matrices(n - n1, m, rng);
            std::vector<Matrix> mats;
            mats.reserve(m);
            for (std::size_t l = 0; l < m; ++l) mats.push_back(direct_sum(top[l], bot[l]));
            return mats;
        }
        case TupleRecipe::Conjugated: {
            std::vector<Matrix> base = recipe_matrices(
                n, m, rng, n >= 2 ? TupleRecipe::BlockDiag : TupleRecipe::PolyInOne);
            Matrix s = random_invertible_integer_matrix(n, 2, rng);
            Matrix s_inv = inverse(s);
            for (Matrix& a : base) a = s * a * s_inv;
            return base;
        }
    }
    throw std::invalid_argument("unknown tuple recipe");
}

} // namespace

Matrix random_invertible_integer_matrix(std::size_t n, int bound, Rng& rng) {
    for (;;) {
        Matrix s = random_integer_matrix(n, bound, rng);
        if (!determinant(s).is_zero()) return s;
    }
}

CommutingTuple random_commuting_tuple(std::size_t n, std::size_t m, std::uint64_t seed,
                                      TupleRecipe recipe) {
    if (n < 1 || m < 1) throw ShapeMismatchError("tuple dimensions must be at least 1");
    Rng rng(seed);
    return CommutingTuple(recipe_matrices(n, m, rng, recipe));
}

} // namespace simsim
