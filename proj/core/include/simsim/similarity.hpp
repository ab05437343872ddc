// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "simsim/annihilator.hpp"
#include "simsim/tuples.hpp"

namespace simsim {

/// Invertible intertwiner certifying simultaneous similarity:
/// S A_l = B_l S for every l, with S S_inverse = I, all exact.
struct SimilarityCertificate {
    Matrix S;
    Matrix S_inverse;
    bool checked = false;
};

/// Decision outcome. Similar verdicts always carry a certificate that has
/// been re-verified exactly; the sampled negative carries the probability
/// that the verdict is wrong (it only can be when the tuples are similar).
struct Verdict {
    enum class Kind { Similar, NotSimilarExact, NotSimilarSampled, Inconclusive };

    Kind kind = Kind::Inconclusive;
    std::optional<SimilarityCertificate> certificate;
    std::string reason;
    double failure_probability_bound = 0.0;

    bool is_similar() const { return kind == Kind::Similar; }
};

/// A required hypothesis of synthesize_from_pair does not hold. When the
/// annihilator equality is what failed, the separating witness is attached.
struct PreconditionFailedError : std::runtime_error {
    explicit PreconditionFailedError(const std::string& what,
                                     std::optional<PolyVector> w = std::nullopt)
        : std::runtime_error(what), witness(std::move(w)) {}
    std::optional<PolyVector> witness;
};

/// Builds the intertwiner sending each generated vector of (A, U) to the
/// matching one of (B, V): the stacked closure is the graph of a linear map
/// once the annihilators agree and both tuples are cyclic, and that map is
/// the similarity. Output is exact and verified.
SimilarityCertificate synthesize_from_pair(const CommutingTuple& ta, const VectorTuple& u,
                                           const CommutingTuple& tb, const VectorTuple& v);

/// True iff s is invertible and s A_l = B_l s exactly for every l.
bool verify_similarity(const CommutingTuple& ta, const CommutingTuple& tb, const Matrix& s);

/// Basis of {S : S A_l = B_l S for all l}, the solution space of m*n^2
/// homogeneous linear equations in the n^2 entries of S.
std::vector<Matrix> intertwiner_space(const CommutingTuple& ta, const CommutingTuple& tb);

/// Full decision procedure via the intertwiner space: exact negative when
/// the space is zero (or, at small sizes, when the generic combination is
/// symbolically singular), randomized negative with a Schwartz-Zippel bound
/// of (n / grid_size)^trials otherwise. Positive verdicts are re-verified.
Verdict decide_similarity(const CommutingTuple& ta, const CommutingTuple& tb,
                          std::size_t trials, std::int64_t grid_size, std::uint64_t seed);

/// (S A_1 S^-1, ..., S A_m S^-1). Throws SingularMatrixError.
CommutingTuple conjugate(const CommutingTuple& t, const Matrix& s);

/// S applied to each vector of u (the image tuple of the necessity proof).
VectorTuple apply_to_tuple(const Matrix& s, const VectorTuple& u);

} // namespace simsim
