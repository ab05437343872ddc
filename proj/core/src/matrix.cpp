// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/matrix.hpp"

#include <algorithm>
#include <utility>

namespace simsim {

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeMismatchError("ragged matrix initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return {};
    std::size_t n = cols.front().size();
    Matrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != n) throw ShapeMismatchError("columns of unequal length");
        for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::conjugate_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw ShapeMismatchError("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        GaussianRational acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) acc += (*this)(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatchError("matrix addition shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.e_.size(); ++t) r.e_[t] = a.e_[t] + b.e_[t];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatchError("matrix subtraction shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.e_.size(); ++t) r.e_[t] = a.e_[t] - b.e_[t];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatchError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j).is_zero()) continue;
                r(i, j) += aik * b(k, j);
            }
        }
    return r;
}

Matrix operator*(const GaussianRational& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.e_.size(); ++t) r.e_[t] = c * a.e_[t];
    return r;
}

Matrix Matrix::operator-() const {
    return GaussianRational(-1) * *this;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& r = res.reduced;
    std::size_t pr = 0; // next pivot row
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && r(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        r.swap_rows(pr, sel);
        GaussianRational inv_piv = GaussianRational(1) / r(pr, c);
        for (std::size_t j = c; j < m.cols(); ++j) r(pr, j) = inv_piv * r(pr, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || r(i, c).is_zero()) continue;
            GaussianRational f = r(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) r(i, j) -= f * r(pr, j);
        }
        res.pivots.push_back(c);
        ++pr;
    }
    res.rank = pr;
    return res;
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<Vector> basis;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t t = 0; t < r.pivots.size(); ++t) v[r.pivots[t]] = -r.reduced(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatchError("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] >= n)
        throw SingularMatrixError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

GaussianRational determinant(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatchError("determinant of non-square matrix");
    std::size_t n = m.rows();
    Matrix a = m;
    GaussianRational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a(sel, c).is_zero()) ++sel;
        if (sel == n) return GaussianRational(0);
        if (sel != c) {
            a.swap_rows(c, sel);
            det = -det;
        }
        det *= a(c, c);
        GaussianRational inv_piv = GaussianRational(1) / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            GaussianRational f = a(i, c) * inv_piv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

Vector IncrementalSpan::reduce(Vector v) const {
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const GaussianRational& c = v[lead_[t]];
        if (c.is_zero()) continue;
        GaussianRational f = c; // rows_[t] has leading 1
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!rows_[t][j].is_zero()) v[j] -= f * rows_[t][j];
    }
    return v;
}

bool IncrementalSpan::insert(const Vector& v) {
    if (v.size() != ambient_) throw ShapeMismatchError("span insert dimension mismatch");
    Vector r = reduce(v);
    std::size_t lead = 0;
    while (lead < ambient_ && r[lead].is_zero()) ++lead;
    if (lead == ambient_) return false;
    GaussianRational inv = GaussianRational(1) / r[lead];
    for (std::size_t j = lead; j < ambient_; ++j) r[j] = inv * r[j];
    rows_.push_back(std::move(r));
    lead_.push_back(lead);
    return true;
}

bool IncrementalSpan::contains(const Vector& v) const {
    if (v.size() != ambient_) throw ShapeMismatchError("span query dimension mismatch");
    return is_zero_vector(reduce(v));
}

} // namespace simsim
