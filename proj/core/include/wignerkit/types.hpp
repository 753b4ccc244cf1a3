// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace wignerkit {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Amplitudes of a vector in a finite-dimensional complex inner-product space.
using StateVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Tolerance for "unit norm" and orthogonality of state vectors.
inline constexpr double kUnitTol = 1e-12;

/// ⟨a,b⟩, conjugate-linear in the first slot.
inline Complex inner(const StateVector& a, const StateVector& b) { return a.dot(b); }

}  // namespace wignerkit
