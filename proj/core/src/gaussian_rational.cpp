// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/gaussian_rational.hpp"

#include <stdexcept>

namespace simsim {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.abs_sq();
    if (n.is_zero()) throw std::domain_error("gaussian rational division by zero");
    GaussianRational num = a * b.conj();
    return {num.re / n, num.im / n};
}

} // namespace simsim
