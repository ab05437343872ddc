// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/annihilator.hpp"

#include <algorithm>
#include <map>

namespace simsim {

namespace {

void extend_monomials(std::vector<Monomial>& acc, Monomial prefix, std::size_t var,
                      unsigned budget) {
    if (var + 1 == prefix.vars()) {
        for (unsigned e = 0; e <= budget; ++e) {
            prefix.exponents[var] = e;
            acc.push_back(prefix);
        }
        return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
        prefix.exponents[var] = e;
        extend_monomials(acc, prefix, var + 1, budget - e);
    }
}

/// Evaluation matrix of (t, u) over the given monomials: column index
/// (monomial-major, generator-minor), column value z^mono(A) u_j. Vectors
/// for z^mono are derived from a lower-degree parent, one matrix apply each.
Matrix evaluation_matrix(const CommutingTuple& t, const VectorTuple& u,
                         const std::vector<Monomial>& monomials) {
    const std::size_t k = u.k();
    Matrix e(t.dim(), monomials.size() * k);
    std::map<Monomial, std::vector<Vector>, GradedLexLess> cache;
    for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
        const Monomial& mono = monomials[mi];
        std::vector<Vector> vecs;
        if (mono.is_constant()) {
            vecs = u.vectors();
        } else {
            std::size_t var = 0;
            while (mono.exponents[var] == 0) ++var;
            Monomial parent = mono;
            --parent.exponents[var];
            auto it = cache.find(parent);
            if (it != cache.end()) {
                vecs.reserve(k);
                for (const Vector& pv : it->second) vecs.push_back(t.apply(var, pv));
            } else {
                vecs.reserve(k);
                for (std::size_t j = 0; j < k; ++j) {
                    Vector w = u[j];
                    for (std::size_t l = 0; l < mono.vars(); ++l)
                        for (unsigned x = 0; x < mono.exponents[l]; ++x) w = t.apply(l, w);
                    vecs.push_back(std::move(w));
                }
            }
        }
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < t.dim(); ++i) e(i, mi * k + j) = vecs[j][i];
        cache.emplace(mono, std::move(vecs));
    }
    return e;
}

PolyVector row_to_polyvector(const Matrix& rows, std::size_t r,
                             const std::vector<Monomial>& monomials, std::size_t k,
                             std::size_t vars) {
    PolyVector p(k, vars);
    for (std::size_t c = 0; c < rows.cols(); ++c)
        if (!rows(r, c).is_zero()) p.set_term(c % k, monomials[c / k], rows(r, c));
    return p;
}

/// Kernel of the evaluation matrix, canonical: the kernel's coefficient-row
/// space in reduced echelon form, rows ordered by leading column.
std::vector<PolyVector> canonical_kernel(const Matrix& eval, const std::vector<Monomial>& monomials,
                                         std::size_t k, std::size_t vars) {
    std::vector<Vector> kb = kernel_basis(eval);
    if (kb.empty()) return {};
    Matrix rows(kb.size(), eval.cols());
    for (std::size_t r = 0; r < kb.size(); ++r)
        for (std::size_t c = 0; c < eval.cols(); ++c) rows(r, c) = kb[r][c];
    RrefResult rr = rref(rows);
    std::vector<PolyVector> out;
    out.reserve(rr.rank);
    for (std::size_t r = 0; r < rr.rank; ++r)
        out.push_back(row_to_polyvector(rr.reduced, r, monomials, k, vars));
    return out;
}

void check_side_shapes(const CommutingTuple& t, const VectorTuple& u) {
    if (u.dim() != t.dim()) throw ShapeMismatchError("vector tuple dimension differs from tuple dimension");
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t vars, unsigned max_degree) {
    if (vars == 0) return {Monomial::constant(0)};
    std::vector<Monomial> out;
    extend_monomials(out, Monomial::constant(vars), 0, max_degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return GradedLexLess{}(a, b);
    });
    return out;
}

bool is_annihilating(const CommutingTuple& t, const VectorTuple& u, const PolyVector& p) {
    return is_zero_vector(evaluate(t, u, p));
}

std::vector<PolyVector> annihilator_basis(const CommutingTuple& t, const VectorTuple& u,
                                          unsigned max_degree) {
    check_side_shapes(t, u);
    std::vector<Monomial> monomials = monomials_up_to(t.arity(), max_degree);
    Matrix eval = evaluation_matrix(t, u, monomials);
    return canonical_kernel(eval, monomials, u.k(), t.arity());
}

ConditionCReport condition_c_check(const CommutingTuple& ta, const VectorTuple& u,
                                   const CommutingTuple& tb, const VectorTuple& v) {
    if (ta.arity() != tb.arity()) throw ShapeMismatchError("tuples of unequal arity");
    if (u.k() != v.k()) throw ShapeMismatchError("vector tuples of unequal length");
    check_side_shapes(ta, u);
    check_side_shapes(tb, v);

    CommutingTuple stacked = direct_sum(ta, tb);
    VectorTuple w = stack_generators(u, v);
    SubspaceBasis closure_a = generated_subspace(ta, u);
    SubspaceBasis closure_b = generated_subspace(tb, v);
    SubspaceBasis closure_w = generated_subspace(stacked, w);

    ConditionCReport report;
    report.dim_a = closure_a.dim();
    report.dim_b = closure_b.dim();
    report.dim_stacked = closure_w.dim();
    report.holds = report.dim_a == report.dim_stacked && report.dim_b == report.dim_stacked;
    if (report.holds) return report;

    // Witness columns: the stacked closure's provenance monomials plus their
    // one-step extensions. Both side evaluation maps reach full rank on this
    // set, so the kernel mismatch guaranteed by the dimension gap shows up.
    std::vector<Monomial> monomials;
    for (const TermProvenance& p : closure_w.provenance) monomials.push_back(p.monomial);
    std::size_t base_count = monomials.size();
    for (std::size_t i = 0; i < base_count; ++i)
        for (std::size_t l = 0; l < ta.arity(); ++l)
            monomials.push_back(monomials[i].times_var(l));
    std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
        return GradedLexLess{}(a, b);
    });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

    const std::size_t k = u.k();
    const std::size_t vars = ta.arity();
    std::vector<PolyVector> ker_a =
        canonical_kernel(evaluation_matrix(ta, u, monomials), monomials, k, vars);
    std::vector<PolyVector> ker_b =
        canonical_kernel(evaluation_matrix(tb, v, monomials), monomials, k, vars);

    const bool a_first = ker_a.size() >= ker_b.size();
    const std::vector<PolyVector>& first = a_first ? ker_a : ker_b;
    const std::vector<PolyVector>& second = a_first ? ker_b : ker_a;
    const CommutingTuple& first_other_t = a_first ? tb : ta;
    const VectorTuple& first_other_u = a_first ? v : u;
    const CommutingTuple& second_other_t = a_first ? ta : tb;
    const VectorTuple& second_other_u = a_first ? u : v;

    for (const PolyVector& p : first)
        if (!is_annihilating(first_other_t, first_other_u, p)) {
            report.witness = p;
            return report;
        }
    for (const PolyVector& p : second)
        if (!is_annihilating(second_other_t, second_other_u, p)) {
            report.witness = p;
            return report;
        }
    throw std::logic_error("dimension gap without a kernel witness");
}

} // namespace simsim
