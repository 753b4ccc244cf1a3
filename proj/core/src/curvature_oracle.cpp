// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Riemann tensor by finite differences of the Fubini–Study metric pulled back
// to the chart u ↦ [ℓ + B·u/2], where B is an orthonormal basis of L⊥. The
// factor 1/2 makes the chart's velocity at u = 0 coincide with the tangent
// vector convention of exp_map. Nothing here calls curvature().

#include "wignerkit/error.hpp"
#include "wignerkit/state_space.hpp"

#include <vector>

namespace wignerkit {

namespace {

using Coords = Eigen::VectorXcd;  // point or direction in C^{n-1}, viewed as R^{2(n-1)}

// Hermitian quotient metric of ψ(u) = ℓ + Bu/2, rescaled so that CP¹ is the
// unit sphere:  h_u(a, b) = [⟨a,b⟩(1+|c|²) − ⟨a,c⟩⟨c,b⟩] / (1+|c|²)²,  c = u/2.
double chart_metric(const Coords& u, const Coords& a, const Coords& b) {
  const Coords c = 0.5 * u;
  const double q = 1.0 + c.squaredNorm();
  const Complex h = (a.dot(b) * q - a.dot(c) * c.dot(b)) / (q * q);
  return h.real();
}

class PulledBackMetric {
 public:
  PulledBackMetric(Index complex_dim, double h) : m_(complex_dim), h_(h) {
    directions_.reserve(2 * m_);
    for (Index d = 0; d < 2 * m_; ++d) {
      Coords e = Coords::Zero(m_);
      e[d % m_] = d < m_ ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
      directions_.push_back(e);
    }
  }

  // (D_Y g)(A, B) at u, central difference along Y/|Y|.
  double metric_derivative(const Coords& u, const Coords& y, const Coords& a, const Coords& b) const {
    const double len = y.norm();
    if (len == 0.0) return 0.0;
    const Coords step = (h_ / len) * y;
    return len * (chart_metric(u + step, a, b) - chart_metric(u - step, a, b)) / (2.0 * h_);
  }

  // Christoffel contraction Γ_u(U, V), returned as a direction.
  Coords christoffel(const Coords& u, const Coords& uu, const Coords& vv) const {
    const Index dim = 2 * m_;
    Eigen::MatrixXd gram(dim, dim);
    Eigen::VectorXd rhs(dim);
    for (Index d = 0; d < dim; ++d) {
      const Coords& ed = directions_[d];
      for (Index e = 0; e < dim; ++e) gram(d, e) = chart_metric(u, ed, directions_[e]);
      rhs[d] = 0.5 * (metric_derivative(u, uu, vv, ed) + metric_derivative(u, vv, uu, ed) -
                      metric_derivative(u, ed, uu, vv));
    }
    const Eigen::VectorXd x = gram.ldlt().solve(rhs);
    Coords out = Coords::Zero(m_);
    for (Index d = 0; d < dim; ++d) out += x[d] * directions_[d];
    return out;
  }

  // (D_X Γ)(Y, Z) at u = 0, central difference along X/|X|.
  Coords christoffel_derivative(const Coords& x, const Coords& y, const Coords& z) const {
    const double len = x.norm();
    if (len == 0.0) return Coords::Zero(m_);
    const Coords step = (h_ / len) * x;
    return len * (christoffel(step, y, z) - christoffel(-step, y, z)) / (2.0 * h_);
  }

  // R(X,Y)Z = (D_X Γ)(Y,Z) − (D_Y Γ)(X,Z) + Γ(X, Γ(Y,Z)) − Γ(Y, Γ(X,Z)) at u = 0,
  // for constant coordinate fields.
  Coords riemann(const Coords& x, const Coords& y, const Coords& z) const {
    const Coords origin = Coords::Zero(m_);
    const Coords dx_gamma_yz = christoffel_derivative(x, y, z);
    const Coords dy_gamma_xz = christoffel_derivative(y, x, z);
    const Coords gamma_yz = christoffel(origin, y, z);
    const Coords gamma_xz = christoffel(origin, x, z);
    return dx_gamma_yz - dy_gamma_xz + christoffel(origin, x, gamma_yz) -
           christoffel(origin, y, gamma_xz);
  }

 private:
  Index m_;
  double h_;
  std::vector<Coords> directions_;
};

}  // namespace

TangentVector curvature_fd_oracle(const Ray& base, const TangentVector& x, const TangentVector& y,
                                  const TangentVector& z, double h) {
  if (!(h >= 1e-4 && h <= 1e-2)) {
    throw Error(ErrorCode::StepOutOfRange, "curvature_fd_oracle: step must lie in [1e-4, 1e-2]");
  }
  for (const TangentVector* v : {&x, &y, &z}) {
    if (!same_base(base, v->base())) {
      throw Error(ErrorCode::BaseMismatch, "curvature_fd_oracle: tangent vector based elsewhere");
    }
  }
  if (base.dim() < 2) return TangentVector::zero(base);

  const Matrix frame = orthonormal_complement(base);
  const PulledBackMetric metric(frame.cols(), h);
  const Coords r = metric.riemann(frame.adjoint() * x.w(), frame.adjoint() * y.w(),
                                  frame.adjoint() * z.w());
  return TangentVector::project(base, frame * r);
}

}  // namespace wignerkit
