// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simsim {

/// Operands have incompatible dimensions.
struct ShapeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A square matrix required to be invertible has rank < n.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Two matrices of a would-be commuting tuple do not commute.
/// Carries the first failing pair (i, j), i < j, in scan order.
struct NotCommutingError : std::invalid_argument {
    NotCommutingError(std::size_t i, std::size_t j)
        : std::invalid_argument("matrices " + std::to_string(i) + " and " +
                                std::to_string(j) + " do not commute"),
          first(i), second(j) {}
    std::size_t first;
    std::size_t second;
};

} // namespace simsim
