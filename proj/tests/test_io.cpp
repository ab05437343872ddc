// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "simsim/io.hpp"
#include "support/fixtures.hpp"

using namespace simsim;
using namespace simsim::testing;

TEST_CASE("scalar literal forms") {
    CHECK(parse_scalar("5") == GaussianRational(5));
    CHECK(parse_scalar("-5") == GaussianRational(-5));
    CHECK(parse_scalar("3/4") == GaussianRational(Rational(3, 4)));
    CHECK(parse_scalar("-3/4") == GaussianRational(Rational(-3, 4)));
    CHECK(parse_scalar("6/4") == GaussianRational(Rational(3, 2)));
    CHECK(parse_scalar("2i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(parse_scalar("-2/3i") == GaussianRational(Rational(0), Rational(-2, 3)));
    CHECK(parse_scalar("1/2+3/4i") == GaussianRational(Rational(1, 2), Rational(3, 4)));
    CHECK(parse_scalar("1/2-3/4i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(parse_scalar("i") == GaussianRational::i());
    CHECK(parse_scalar("-i") == -GaussianRational::i());
    CHECK(parse_scalar("2+i") == GaussianRational(Rational(2), Rational(1)));
    CHECK(parse_scalar("2-i") == GaussianRational(Rational(2), Rational(-1)));
}

TEST_CASE("scalar literal rejections") {
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 / 2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+2i3"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("scalar literals round trip") {
    Rng rng(81);
    for (int trial = 0; trial < 300; ++trial) {
        GaussianRational z(Rational(rng.uniform(-1000, 1000), rng.uniform(1, 60)),
                           Rational(rng.uniform(-1000, 1000), rng.uniform(1, 60)));
        CHECK(parse_scalar(format_scalar(z)) == z);
    }
    CHECK(format_scalar(GaussianRational(0)) == "0");
    CHECK(format_scalar(GaussianRational(Rational(3, 2))) == "3/2");
    CHECK(format_scalar(GaussianRational(Rational(0), Rational(-2))) == "-2i");
    CHECK(format_scalar(GaussianRational(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4i");
}

TEST_CASE("polynomial tuple formatting") {
    PolyVector p(2, 1);
    p.set_term(0, Monomial::constant(1), GaussianRational(1));
    p.set_term(1, Monomial{{1}}, GaussianRational(-1));
    CHECK(format_poly_vector(p) == "(1, -z)");

    PolyVector q(1, 2);
    q.set_term(0, Monomial{{2, 1}}, GaussianRational(Rational(3, 2)));
    q.set_term(0, Monomial::constant(2), GaussianRational(-2));
    CHECK(format_poly_vector(q) == "(-2 + 3/2*z1^2*z2)");

    CHECK(format_poly_vector(PolyVector::zero(2, 1)) == "(0, 0)");

    PolyVector r(1, 1);
    r.set_term(0, Monomial{{2}}, GaussianRational(Rational(0), Rational(1)));
    r.set_term(0, Monomial{{1}}, GaussianRational(-1));
    CHECK(format_poly_vector(r) == "(-z + (1i)*z^2)");
}

TEST_CASE("tuple file parsing") {
    const std::string text = R"({
        "n": 2, "m": 1,
        "matrices": [ [["0", "1"], ["0", "0"]] ],
        "vectors": [ ["1", "0"], ["0", "1"] ]
    })";
    TupleFile f = parse_tuple_file_text(text);
    CHECK(f.n == 2);
    CHECK(f.m == 1);
    REQUIRE(f.matrices.size() == 1);
    CHECK(f.matrices[0] == example_a());
    REQUIRE(f.vectors.has_value());
    CHECK(f.vectors->size() == 2);

    // integers may be given as JSON numbers
    TupleFile g = parse_tuple_file_text(R"({"n":1,"m":1,"matrices":[[[3]]]})");
    CHECK(g.matrices[0] == Matrix{{3}});
}

TEST_CASE("tuple file validation errors") {
    CHECK_THROWS_AS(parse_tuple_file_text("not json"), ParseError);
    CHECK_THROWS_AS(parse_tuple_file_text(R"({"n":2,"m":1})"), ParseError);
    CHECK_THROWS_AS(parse_tuple_file_text(R"({"n":2,"m":2,"matrices":[[["1","0"],["0","1"]]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_tuple_file_text(R"({"n":2,"m":1,"matrices":[[["1","0"]]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_tuple_file_text(R"({"n":1,"m":1,"matrices":[[["0.5"]]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_tuple_file_text(R"({"n":1,"m":1,"matrices":[[[0.5]]]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_tuple_file_text(R"({"n":1,"m":1,"matrices":[[["1"]]],"vectors":[["1"]],"k":5})"),
        ParseError);
}

TEST_CASE("vectors and matrix files") {
    std::vector<Vector> vs = parse_vectors_file_text(R"({"vectors": [["1","0"],["0","1"]]})");
    CHECK(vs.size() == 2);
    CHECK(vs[0] == unit_vector(2, 0));

    std::vector<Vector> bare = parse_vectors_file_text(R"([["1","2/3"]])");
    REQUIRE(bare.size() == 1);
    CHECK(bare[0][1] == GaussianRational(Rational(2, 3)));

    Matrix s = parse_matrix_file_text(R"({"matrix": [["-1","2"],["-1","1"]]})");
    CHECK(s == example_s());
    CHECK(parse_matrix_file_text(R"([["-1","2"],["-1","1"]])") == example_s());
    CHECK_THROWS_AS(parse_matrix_file_text(R"({"matrix": [["1","2"]]})"), ParseError);
}

TEST_CASE("matrix serialization uses the literal grammar") {
    Rng rng(83);
    Matrix m = random_gaussian_matrix(3, 3, 9, rng);
    auto strings = matrix_to_strings(m);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(parse_scalar(strings[i][j]) == m(i, j));
}
