// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wignerkit/state_space.hpp"

#include <cstdint>
#include <random>

namespace wignerkit {

using Rng = std::mt19937_64;

/// Standard complex Gaussian vector (unnormalized).
StateVector gaussian_vector(Index dim, Rng& rng);

/// Unitarily invariant random ray.
Ray random_ray(Index dim, Rng& rng);

/// Haar unitary: QR of a complex Gaussian matrix with R's diagonal phases
/// moved into Q.
Matrix haar_unitary(Index dim, Rng& rng);

}  // namespace wignerkit
