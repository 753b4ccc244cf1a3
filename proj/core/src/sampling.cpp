// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/sampling.hpp"

#include <cmath>

namespace wignerkit {

StateVector gaussian_vector(Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  StateVector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = Complex(re, im);
  }
  return v;
}

Ray random_ray(Index dim, Rng& rng) {
  for (;;) {
    StateVector v = gaussian_vector(dim, rng);
    if (v.norm() > 1e-6) return Ray(v);
  }
}

Matrix haar_unitary(Index dim, Rng& rng) {
  Matrix z(dim, dim);
  for (Index j = 0; j < dim; ++j) z.col(j) = gaussian_vector(dim, rng) / std::sqrt(2.0);

  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const double mod = std::abs(r(j, j));
    if (mod > 0.0) q.col(j) *= r(j, j) / mod;
  }
  return q;
}

}  // namespace wignerkit
