// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/probes.hpp"

#include "wignerkit/error.hpp"

namespace wignerkit {

ProbeRays standard_probes(Index dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "standard_probes: dim must be positive");
  const Complex i(0.0, 1.0);
  ProbeRays probes{Ray::basis(dim, 0), {}, {}, {}};
  for (Index k = 1; k < dim; ++k) {
    StateVector a = StateVector::Zero(dim);
    a[0] = 1.0;
    a[k] = 1.0;
    StateVector b = StateVector::Zero(dim);
    b[0] = 1.0;
    b[k] = i;
    probes.a.emplace_back(a);
    probes.b.emplace_back(b);
    probes.v.push_back(Ray::basis(dim, k));
  }
  return probes;
}

}  // namespace wignerkit
