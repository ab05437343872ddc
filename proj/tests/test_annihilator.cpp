// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "simsim/annihilator.hpp"
#include "simsim/norms.hpp"
#include "support/brute_oracle.hpp"
#include "support/fixtures.hpp"

using namespace simsim;
using namespace simsim::testing;

namespace {

PolyVector one_minus_z() {
    PolyVector p(2, 1);
    p.set_term(0, Monomial::constant(1), GaussianRational(1));
    p.set_term(1, Monomial{{1}}, GaussianRational(-1));
    return p;
}

} // namespace

TEST_CASE("is_annihilating on the worked example") {
    CommutingTuple a({example_a()});
    CommutingTuple b({example_b()});
    VectorTuple e12 = VectorTuple::standard_basis(2);
    CHECK(is_annihilating(a, e12, one_minus_z()));
    CHECK(!is_annihilating(b, e12, one_minus_z()));
    CHECK(is_annihilating(b, e12, PolyVector::zero(2, 1)));
}

TEST_CASE("condition (c) holds on identical sides") {
    CommutingTuple t = random_commuting_tuple(4, 2, 3, TupleRecipe::BlockDiag);
    VectorTuple u = VectorTuple::standard_basis(4);
    ConditionCReport r = condition_c_check(t, u, t, u);
    CHECK(r.holds);
    CHECK(r.dim_a == r.dim_stacked);
    CHECK(r.dim_b == r.dim_stacked);
    CHECK(!r.witness.has_value());
}

TEST_CASE("condition (c) fails on the worked example with the printed witness") {
    CommutingTuple a({example_a()});
    CommutingTuple b({example_b()});
    VectorTuple e12 = VectorTuple::standard_basis(2);
    ConditionCReport r = condition_c_check(a, e12, b, e12);
    CHECK(!r.holds);
    CHECK(r.dim_a == 2);
    CHECK(r.dim_b == 2);
    CHECK(r.dim_stacked == 4);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == one_minus_z());
    // exactly one side vanishes
    CHECK(is_annihilating(a, e12, *r.witness) != is_annihilating(b, e12, *r.witness));
}

TEST_CASE("condition (c) holds for the shift against its double") {
    for (std::size_t n : {2, 3, 5, 8}) {
        CommutingTuple a({shift_matrix(n)});
        CommutingTuple b({GaussianRational(2) * shift_matrix(n)});
        VectorTuple u({unit_vector(n, 0)});
        ConditionCReport r = condition_c_check(a, u, b, u);
        CHECK(r.holds);
        CHECK(r.dim_a == n);
    }
}

TEST_CASE("condition (c) allows different ambient dimensions") {
    // J_2 from e1 annihilates exactly (z^2); diag(0) from e1 annihilates (z).
    CommutingTuple a({shift_matrix(2)});
    CommutingTuple b({Matrix(1, 1)});
    ConditionCReport r = condition_c_check(a, VectorTuple({unit_vector(2, 0)}),
                                           b, VectorTuple({unit_vector(1, 0)}));
    CHECK(!r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(is_annihilating(a, VectorTuple({unit_vector(2, 0)}), *r.witness) !=
          is_annihilating(b, VectorTuple({unit_vector(1, 0)}), *r.witness));
}

TEST_CASE("annihilator basis of the 3x3 shift") {
    CommutingTuple t({shift_matrix(3)});
    VectorTuple u({unit_vector(3, 0)});
    std::vector<PolyVector> basis = annihilator_basis(t, u, 4);
    REQUIRE(basis.size() == 2);
    PolyVector z3(1, 1), z4(1, 1);
    z3.set_term(0, Monomial{{3}}, GaussianRational(1));
    z4.set_term(0, Monomial{{4}}, GaussianRational(1));
    CHECK(basis[0] == z3);
    CHECK(basis[1] == z4);
}

TEST_CASE("annihilator basis of diag(1,2) from the all-ones vector") {
    CommutingTuple t({diagonal({1, 2})});
    VectorTuple u({Vector{GaussianRational(1), GaussianRational(1)}});
    std::vector<PolyVector> basis = annihilator_basis(t, u, 2);
    REQUIRE(basis.size() == 1);
    // proportional to (z-1)(z-2) = 2 - 3z + z^2; canonical leading coeff 1 at
    // the constant term: 1 - 3/2 z + 1/2 z^2.
    PolyVector expected(1, 1);
    expected.set_term(0, Monomial::constant(1), GaussianRational(1));
    expected.set_term(0, Monomial{{1}}, GaussianRational(Rational(-3, 2)));
    expected.set_term(0, Monomial{{2}}, GaussianRational(Rational(1, 2)));
    CHECK(basis[0] == expected);
    CHECK(is_annihilating(t, u, basis[0]));
}

TEST_CASE("annihilator basis at degree zero") {
    CommutingTuple t({shift_matrix(2)});
    CHECK(annihilator_basis(t, VectorTuple({unit_vector(2, 0)}), 0).empty());
    std::vector<PolyVector> of_zero = annihilator_basis(t, VectorTuple({Vector(2)}), 0);
    REQUIRE(of_zero.size() == 1); // the constant tuple (1) kills the zero vector
    CHECK(of_zero[0].coeff(0, Monomial::constant(1)) == GaussianRational(1));
}

TEST_CASE("annihilator basis matches the brute-force oracle") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, 2));
        unsigned d = static_cast<unsigned>(rng.uniform(0, 4));
        CommutingTuple t = random_commuting_tuple(n, m, rng.fork_seed(), recipe_by_index(trial));
        std::vector<Vector> gens;
        for (std::size_t j = 0; j < k; ++j)
            gens.push_back(random_integer_matrix(n, 1, 3, rng).column(0));
        VectorTuple u(gens);

        std::vector<PolyVector> fast = annihilator_basis(t, u, d);
        std::vector<PolyVector> slow = brute_annihilator_basis(t, u, d);
        CHECK(fast.size() == slow.size());
        CHECK(same_span(fast, slow));
        for (const PolyVector& p : fast) CHECK(is_annihilating(t, u, p));
    }
}

TEST_CASE("condition (c) is symmetric and sandwiched") {
    Rng rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        CommutingTuple a = random_commuting_tuple(n, 2, rng.fork_seed(), recipe_by_index(trial));
        CommutingTuple b = random_commuting_tuple(n, 2, rng.fork_seed(),
                                                  recipe_by_index(trial + 1));
        VectorTuple u = VectorTuple::standard_basis(n);
        ConditionCReport r1 = condition_c_check(a, u, b, u);
        ConditionCReport r2 = condition_c_check(b, u, a, u);
        CHECK(r1.holds == r2.holds);
        CHECK(r1.dim_stacked >= std::max(r1.dim_a, r1.dim_b));
        if (r1.holds) CHECK(r1.dim_a == r1.dim_b);
        if (!r1.holds) {
            REQUIRE(r1.witness.has_value());
            CHECK(is_annihilating(a, u, *r1.witness) != is_annihilating(b, u, *r1.witness));
        }
    }
}

TEST_CASE("condition (c) agrees with the synthesizer on cyclic pairs") {
    Rng rng(57);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        CommutingTuple a = random_commuting_tuple(n, 2, rng.fork_seed(), recipe_by_index(trial));
        bool conjugated = trial % 2 == 0;
        CommutingTuple b = conjugated
            ? conjugate(a, random_invertible_integer_matrix(n, 3, rng))
            : random_commuting_tuple(n, 2, rng.fork_seed(), recipe_by_index(trial + 1));
        VectorTuple u = VectorTuple::standard_basis(n);
        if (!is_cyclic(a, u) || !is_cyclic(b, u)) continue;

        ConditionCReport r = condition_c_check(a, u, b, u);
        bool synthesized = false;
        try {
            SimilarityCertificate cert = synthesize_from_pair(a, u, b, u);
            synthesized = true;
            CHECK(verify_similarity(a, b, cert.S));
            NormReport norm = optimal_constant(a, u, b, u);
            CHECK(inequality_sample_test(a, u, b, u, norm.c, 100, 4, 3).passed);
        } catch (const PreconditionFailedError&) {
        }
        CHECK(r.holds == synthesized);
    }
}

TEST_CASE("condition (c) survives arbitrary generators, zero vectors included") {
    Rng rng(58);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t na = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t nb = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        CommutingTuple a = random_commuting_tuple(na, m, rng.fork_seed(), recipe_by_index(trial));
        CommutingTuple b = random_commuting_tuple(nb, m, rng.fork_seed(),
                                                  recipe_by_index(trial + 1));
        auto draw_vectors = [&](std::size_t n) {
            std::vector<Vector> vs;
            for (std::size_t j = 0; j < k; ++j) {
                Vector v(n);
                if (rng.uniform(0, 4) != 0) // one in five stays the zero vector
                    for (GaussianRational& x : v) x = GaussianRational(Rational(rng.uniform(-2, 2)));
                vs.push_back(std::move(v));
            }
            return VectorTuple(std::move(vs));
        };
        VectorTuple u = draw_vectors(na);
        VectorTuple v = draw_vectors(nb);

        ConditionCReport r = condition_c_check(a, u, b, v);
        CHECK(r.dim_stacked >= std::max(r.dim_a, r.dim_b));
        CHECK(r.dim_stacked <= r.dim_a + r.dim_b);
        CHECK(r.holds == (r.dim_a == r.dim_stacked && r.dim_b == r.dim_stacked));
        if (!r.holds) {
            REQUIRE(r.witness.has_value());
            CHECK(!r.witness->is_zero());
            CHECK(is_annihilating(a, u, *r.witness) != is_annihilating(b, v, *r.witness));
        }
    }
}

TEST_CASE("evaluate validates shapes") {
    CommutingTuple t({shift_matrix(2)});
    VectorTuple u({unit_vector(2, 0)});
    CHECK_THROWS_AS(evaluate(t, u, PolyVector::zero(2, 1)), ShapeMismatchError); // k mismatch
    CHECK_THROWS_AS(evaluate(t, u, PolyVector::zero(1, 2)), ShapeMismatchError); // vars mismatch
    CHECK_THROWS_AS(evaluate(t, VectorTuple({unit_vector(3, 0)}), PolyVector::zero(1, 1)),
                    ShapeMismatchError); // dim mismatch
}

TEST_CASE("condition (c) rejects mismatched shapes") {
    CommutingTuple a({shift_matrix(2)});
    CommutingTuple two({shift_matrix(2), shift_matrix(2)});
    VectorTuple u = VectorTuple::standard_basis(2);
    CHECK_THROWS_AS(condition_c_check(a, u, two, u), ShapeMismatchError);
    CHECK_THROWS_AS(condition_c_check(a, u, a, VectorTuple({unit_vector(2, 0)})),
                    ShapeMismatchError);
}
