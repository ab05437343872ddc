// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/krylov.hpp"

namespace simsim {

unsigned SubspaceBasis::stabilization_degree() const {
    unsigned d = 0;
    for (const TermProvenance& p : provenance) d = std::max(d, p.monomial.total_degree());
    return d;
}

SubspaceBasis generated_subspace(const CommutingTuple& t, const VectorTuple& u) {
    if (u.dim() != t.dim()) throw ShapeMismatchError("generator dimension differs from tuple dimension");
    const std::size_t n = t.dim();
    const std::size_t m = t.arity();

    SubspaceBasis out;
    IncrementalSpan span(n);
    std::vector<std::size_t> frontier; // indices into out.basis added last layer

    for (std::size_t j = 0; j < u.k(); ++j) {
        if (!span.insert(u[j])) continue;
        out.basis.push_back(u[j]);
        out.provenance.push_back({Monomial::constant(m), j});
        frontier.push_back(out.basis.size() - 1);
    }

    while (!frontier.empty() && span.dim() < n) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (std::size_t l = 0; l < m; ++l) {
                Vector w = t.apply(l, out.basis[idx]);
                if (!span.insert(w)) continue;
                out.basis.push_back(std::move(w));
                out.provenance.push_back({out.provenance[idx].monomial.times_var(l),
                                          out.provenance[idx].generator});
                next.push_back(out.basis.size() - 1);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

bool is_cyclic(const CommutingTuple& t, const VectorTuple& u) {
    return generated_subspace(t, u).dim() == t.dim();
}

namespace {

VectorTuple random_grid_tuple(std::size_t k, std::size_t n, Rng& rng, int bound) {
    std::vector<Vector> vs(k, Vector(n));
    for (Vector& v : vs)
        for (GaussianRational& x : v) x = GaussianRational(Rational(rng.uniform(-bound, bound)));
    return VectorTuple(std::move(vs));
}

constexpr int kGridBound = 10;

} // namespace

VectorTuple find_cyclic_tuple(const CommutingTuple& t, CyclicSearch strategy, std::uint64_t seed,
                              std::size_t trials_per_k) {
    const std::size_t n = t.dim();
    if (strategy == CyclicSearch::Greedy) {
        std::vector<Vector> gens;
        IncrementalSpan span(n);
        while (span.dim() < n) {
            // First standard basis vector outside the current closure;
            // one exists whenever the span is proper.
            std::size_t pick = n;
            for (std::size_t i = 0; i < n && pick == n; ++i) {
                Vector e(n);
                e[i] = 1;
                if (!span.contains(e)) pick = i;
            }
            if (pick == n) throw std::logic_error("proper subspace contains every basis vector");
            Vector e(n);
            e[pick] = 1;
            gens.push_back(e);
            SubspaceBasis closure = generated_subspace(t, VectorTuple(gens));
            span = IncrementalSpan(n);
            for (const Vector& b : closure.basis) span.insert(b);
        }
        return VectorTuple(std::move(gens));
    }

    if (trials_per_k < 1) throw std::invalid_argument("trials must be at least 1");
    Rng rng(seed);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t trial = 0; trial < trials_per_k; ++trial) {
            VectorTuple u = random_grid_tuple(k, n, rng, kGridBound);
            if (is_cyclic(t, u)) return u;
        }
    }
    return VectorTuple::standard_basis(n);
}

std::size_t min_cyclic_k_estimate(const CommutingTuple& t, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const std::size_t n = t.dim();
    Rng rng(seed);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t trial = 0; trial < trials; ++trial) {
            if (is_cyclic(t, random_grid_tuple(k, n, rng, kGridBound))) return k;
        }
    }
    return n; // the standard basis is always cyclic
}

} // namespace simsim
