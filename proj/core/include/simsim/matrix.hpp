// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "simsim/errors.hpp"
#include "simsim/gaussian_rational.hpp"

namespace simsim {

using Vector = std::vector<GaussianRational>;

bool is_zero_vector(const Vector& v);

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void swap_rows(std::size_t a, std::size_t b);

    Matrix transpose() const;
    Matrix conjugate_transpose() const;
    bool is_zero() const;

    /// Matrix-vector product M*v.
    Vector apply(const Vector& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& c, const Matrix& a);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> e_;
};

/// blockdiag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

/// Reduced row echelon form. Pivot rule: for each column in order, the
/// first row (top to bottom) with a nonzero entry; output is deterministic.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column of rref(M), in
/// ascending free-column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Exact inverse. Throws SingularMatrixError when rank < n.
Matrix inverse(const Matrix& m);

/// Exact determinant via pivoted elimination over the field.
GaussianRational determinant(const Matrix& m);

/// Incremental row-space membership tester. Holds a reduced spanning set;
/// insertion is O(dim * n) per vector.
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }

    /// Adds v to the span. Returns true iff the dimension grew.
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;

private:
    Vector reduce(Vector v) const;

    std::size_t ambient_;
    std::vector<Vector> rows_;         // each normalized with leading 1
    std::vector<std::size_t> lead_;    // leading index of rows_[t]
};

} // namespace simsim
