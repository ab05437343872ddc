// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simsim/tuples.hpp"

namespace simsim {

/// Malformed input file or scalar literal.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact scalar literals: "a", "a/b", "a/b+c/di" (and the pure-imaginary
/// forms "ci", "i"). Whitespace is not allowed. format_scalar emits the
/// same grammar, so values round-trip bit-exactly.
GaussianRational parse_scalar(std::string_view text);
std::string format_scalar(const GaussianRational& z);
std::string format_rational(const Rational& r);

/// Human-readable polynomial tuple, e.g. "(1, -z)" or "(z1^2*z2, 3/2)".
/// Single-variable tuples use "z"; multivariate use "z1", "z2", ...
std::string format_poly_vector(const PolyVector& p);
std::string format_monomial(const Monomial& m);

/// On-disk tuple description: n, m, the matrices, and optional vectors.
struct TupleFile {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Matrix> matrices;
    std::optional<std::vector<Vector>> vectors;
};

TupleFile parse_tuple_file_text(const std::string& json_text);
TupleFile read_tuple_file(const std::string& path);

std::vector<Vector> parse_vectors_file_text(const std::string& json_text);
std::vector<Vector> read_vectors_file(const std::string& path);

Matrix parse_matrix_file_text(const std::string& json_text);
Matrix read_matrix_file(const std::string& path);

/// Serialization helpers for machine output (exact literals throughout).
std::vector<std::vector<std::string>> matrix_to_strings(const Matrix& m);
std::vector<std::string> vector_to_strings(const Vector& v);

} // namespace simsim
