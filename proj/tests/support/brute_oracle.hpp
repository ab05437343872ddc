// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force reference for annihilator computations, kept deliberately
// independent of the library path: monomials are enumerated by plain
// recursion in lex order, matrix powers are formed as explicit products,
// and the kernel comes from a self-contained elimination.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "simsim/tuples.hpp"

namespace simsim::testing {

inline void lex_exponents(std::size_t vars, unsigned budget, std::vector<unsigned>& prefix,
                          std::vector<std::vector<unsigned>>& out) {
    if (prefix.size() == vars) {
        out.push_back(prefix);
        return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
        prefix.push_back(e);
        lex_exponents(vars, budget - e, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<unsigned>> lex_monomials(std::size_t vars, unsigned max_degree) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> prefix;
    lex_exponents(vars, max_degree, prefix, out);
    return out;
}

/// Self-contained row elimination; returns the echelon rows (nonzero only).
inline std::vector<std::vector<GaussianRational>> brute_echelon(
    std::vector<std::vector<GaussianRational>> rows) {
    std::vector<std::vector<GaussianRational>> done;
    std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < width && !rows.empty(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::vector<GaussianRational> pivot_row = rows[sel];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(sel));
        GaussianRational inv = GaussianRational(1) / pivot_row[col];
        for (auto& x : pivot_row) x = inv * x;
        for (auto& row : rows) {
            if (row[col].is_zero()) continue;
            GaussianRational f = row[col];
            for (std::size_t j = 0; j < width; ++j) row[j] -= f * pivot_row[j];
        }
        done.push_back(std::move(pivot_row));
    }
    return done;
}

inline std::size_t brute_rank(const std::vector<std::vector<GaussianRational>>& rows) {
    return brute_echelon(rows).size();
}

/// Kernel of the linear map given by its rows, via elimination and the
/// free-column construction.
inline std::vector<std::vector<GaussianRational>> brute_kernel(
    const std::vector<std::vector<GaussianRational>>& rows, std::size_t width) {
    std::vector<std::vector<GaussianRational>> ech = brute_echelon(rows);
    std::vector<std::size_t> pivots;
    for (const auto& row : ech) {
        std::size_t lead = 0;
        while (lead < width && row[lead].is_zero()) ++lead;
        pivots.push_back(lead);
    }
    // Back-substitute to full reduced form.
    for (std::size_t r = ech.size(); r-- > 0;) {
        for (std::size_t above = 0; above < r; ++above) {
            GaussianRational f = ech[above][pivots[r]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < width; ++j) ech[above][j] -= f * ech[r][j];
        }
    }
    std::vector<bool> is_pivot(width, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<GaussianRational>> kernel;
    for (std::size_t f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        std::vector<GaussianRational> v(width);
        v[f] = 1;
        for (std::size_t r = 0; r < ech.size(); ++r) v[pivots[r]] = -ech[r][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

/// Annihilating polynomial tuples of total degree <= max_degree, computed
/// the slow way: explicit matrix powers per monomial, generator-major
/// column order, independent elimination.
inline std::vector<PolyVector> brute_annihilator_basis(const CommutingTuple& t,
                                                       const VectorTuple& u,
                                                       unsigned max_degree) {
    const std::size_t n = t.dim();
    const std::size_t k = u.k();
    std::vector<std::vector<unsigned>> monos = lex_monomials(t.arity(), max_degree);

    std::vector<Vector> columns; // index = j * #monos + mono
    for (std::size_t j = 0; j < k; ++j) {
        for (const auto& exps : monos) {
            Matrix power = Matrix::identity(n);
            for (std::size_t l = 0; l < t.arity(); ++l)
                for (unsigned e = 0; e < exps[l]; ++e) power = power * t.matrix(l);
            columns.push_back(power.apply(u[j]));
        }
    }

    std::vector<std::vector<GaussianRational>> rows(n,
        std::vector<GaussianRational>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) rows[i][c] = columns[c][i];

    std::vector<PolyVector> out;
    for (const auto& kv : brute_kernel(rows, columns.size())) {
        PolyVector p(k, t.arity());
        for (std::size_t c = 0; c < kv.size(); ++c) {
            if (kv[c].is_zero()) continue;
            std::size_t j = c / monos.size();
            p.set_term(j, Monomial{monos[c % monos.size()]}, kv[c]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Span equality of two sets of polynomial tuples, decided by rank counts
/// over the union of their supports (using the oracle's own elimination).
inline bool same_span(const std::vector<PolyVector>& a, const std::vector<PolyVector>& b) {
    std::map<std::pair<std::vector<unsigned>, std::size_t>, std::size_t> col_index;
    auto index_terms = [&](const std::vector<PolyVector>& set) {
        for (const PolyVector& p : set)
            for (std::size_t j = 0; j < p.k(); ++j)
                for (const auto& [mono, c] : p.component(j))
                    col_index.emplace(std::make_pair(mono.exponents, j), col_index.size());
    };
    index_terms(a);
    index_terms(b);
    auto to_rows = [&](const std::vector<PolyVector>& set) {
        std::vector<std::vector<GaussianRational>> rows;
        for (const PolyVector& p : set) {
            std::vector<GaussianRational> row(col_index.size());
            for (std::size_t j = 0; j < p.k(); ++j)
                for (const auto& [mono, c] : p.component(j))
                    row[col_index.at({mono.exponents, j})] = c;
            rows.push_back(std::move(row));
        }
        return rows;
    };
    std::vector<std::vector<GaussianRational>> rows_a = to_rows(a);
    std::vector<std::vector<GaussianRational>> rows_b = to_rows(b);
    std::size_t ra = brute_rank(rows_a);
    std::size_t rb = brute_rank(rows_b);
    if (ra != rb) return false;
    std::vector<std::vector<GaussianRational>> both = rows_a;
    both.insert(both.end(), rows_b.begin(), rows_b.end());
    return brute_rank(both) == ra;
}

} // namespace simsim::testing
