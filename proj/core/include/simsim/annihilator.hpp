// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "simsim/krylov.hpp"
#include "simsim/tuples.hpp"

namespace simsim {

/// Outcome of the annihilator-equality test. `holds` is true iff the
/// annihilator of (A, U) equals the annihilator of (B, V) as subsets of
/// C[z_1..z_m]^k; the three dimensions certify the decision. When it
/// fails, `witness` annihilates exactly one of the two sides.
struct ConditionCReport {
    bool holds = false;
    std::size_t dim_a = 0;       // dim of the subspace generated by (A, U)
    std::size_t dim_b = 0;       // dim of the subspace generated by (B, V)
    std::size_t dim_stacked = 0; // dim for blockdiag(A, B) with stacked generators
    std::optional<PolyVector> witness;
};

/// Decides annihilator equality with no degree bound: the two annihilators
/// coincide iff the stacked closure projects bijectively onto both side
/// closures, i.e. iff all three dimensions agree. Sides may live in
/// different ambient dimensions.
ConditionCReport condition_c_check(const CommutingTuple& ta, const VectorTuple& u,
                                   const CommutingTuple& tb, const VectorTuple& v);

/// Basis of the space of polynomial tuples of total degree <= max_degree
/// annihilating (t, u). Returned in canonical form: coefficient rows are in
/// reduced echelon form over the graded-lex column order (monomial major,
/// generator index minor), so each element has leading coefficient 1 at a
/// distinct leading term and elements are sorted by leading term.
std::vector<PolyVector> annihilator_basis(const CommutingTuple& t, const VectorTuple& u,
                                          unsigned max_degree);

/// True iff the evaluation of p at (t, u) is exactly the zero vector.
bool is_annihilating(const CommutingTuple& t, const VectorTuple& u, const PolyVector& p);

/// All monomials in `vars` variables of total degree <= max_degree, in
/// graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t vars, unsigned max_degree);

} // namespace simsim
