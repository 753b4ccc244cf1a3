// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wignerkit/state_space.hpp"

#include <vector>

namespace wignerkit {

/// The determining set of rays used to present a ray-space symmetry:
///   base = [e₁],  A_k = [(e₁+e_k)/√2],  B_k = [(e₁+i·e_k)/√2],  V_k = [e_k],
/// for k = 2..n (stored zero-based, so A[0] is A₂).
struct ProbeRays {
  Ray base;
  std::vector<Ray> a;
  std::vector<Ray> b;
  std::vector<Ray> v;
};

ProbeRays standard_probes(Index dim);

}  // namespace wignerkit
