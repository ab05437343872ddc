// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "simsim/tuples.hpp"

namespace simsim {

/// Records which single-term evaluation produced a basis vector: the vector
/// equals z^monomial(A) u_generator.
struct TermProvenance {
    Monomial monomial;
    std::size_t generator;

    friend bool operator==(const TermProvenance& a, const TermProvenance& b) = default;
};

/// Exact basis of the subspace generated from a vector tuple under a
/// commuting tuple, with per-vector provenance. Basis vectors are kept as
/// produced (not echelonized) so each one is a single monomial evaluation.
struct SubspaceBasis {
    std::vector<Vector> basis;
    std::vector<TermProvenance> provenance;

    std::size_t dim() const { return basis.size(); }
    /// Max total degree among provenance monomials (the closure's
    /// stabilization degree); 0 when the basis is empty.
    unsigned stabilization_degree() const;
};

/// Smallest subspace containing the generators and invariant under every
/// matrix of the tuple, computed by degree layers. A layer that enlarges
/// nothing ends the loop; at most n layers ever enlarge.
SubspaceBasis generated_subspace(const CommutingTuple& t, const VectorTuple& u);

/// True iff the generated subspace is all of C^n.
bool is_cyclic(const CommutingTuple& t, const VectorTuple& u);

enum class CyclicSearch {
    Greedy, // extend by the first standard basis vector outside the span
    Random, // sample integer-grid k-tuples for k = 1, 2, ...
};

/// Finds a cyclic tuple for t; the result always satisfies is_cyclic and
/// has k <= n. Greedy is deterministic; Random is deterministic given seed
/// and draws trials_per_k samples at each k before enlarging the tuple.
VectorTuple find_cyclic_tuple(const CommutingTuple& t, CyclicSearch strategy,
                              std::uint64_t seed = 0, std::size_t trials_per_k = 16);

/// Smallest k for which some random integer-grid k-tuple among `trials`
/// samples is cyclic: an upper bound on the true minimal k, correct with
/// high probability. Falls back to n (standard basis) if sampling never
/// succeeds.
std::size_t min_cyclic_k_estimate(const CommutingTuple& t, std::size_t trials,
                                  std::uint64_t seed);

} // namespace simsim
