// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/state_space.hpp"

#include "wignerkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wignerkit {

namespace {

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + ": dimensions " + std::to_string(a) +
                                            " and " + std::to_string(b) + " differ");
  }
}

void require_base(const Ray& expected, const TangentVector& v, const char* what) {
  if (!same_base(expected, v.base())) {
    throw Error(ErrorCode::BaseMismatch, std::string(what) + ": tangent vector based elsewhere");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Ray

Ray::Ray(const StateVector& v) {
  if (v.size() < 1) throw Error(ErrorCode::InvalidArgument, "Ray: empty vector");
  const double norm = v.norm();
  if (!(norm > kUnitTol)) throw Error(ErrorCode::ZeroVector, "Ray: vector norm " + std::to_string(norm));

  // Already unit up to rounding: keep the bits so canonicalization is idempotent.
  rep_ = std::abs(norm - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon() ? v : StateVector(v / norm);
  const double max_mod = rep_.cwiseAbs().maxCoeff();
  Index k = 0;
  while (std::abs(rep_[k]) < max_mod - kUnitTol) ++k;
  const double mod = std::abs(rep_[k]);
  rep_ *= std::conj(rep_[k]) / mod;
  rep_[k] = Complex(std::abs(rep_[k]), 0.0);
}

Ray Ray::basis(Index dim, Index k) {
  if (k < 0 || k >= dim) throw Error(ErrorCode::InvalidArgument, "Ray::basis: index out of range");
  StateVector e = StateVector::Zero(dim);
  e[k] = 1.0;
  return Ray(e);
}

Ray canonical_representative(const StateVector& v) { return Ray(v); }

// ---------------------------------------------------------------------------
// TangentVector

TangentVector::TangentVector(Ray base, StateVector w) : base_(std::move(base)), w_(std::move(w)) {
  require_same_dim(base_.dim(), w_.size(), "TangentVector");
  const double overlap = std::abs(inner(base_.rep(), w_));
  if (overlap > kUnitTol * std::max(1.0, w_.norm())) {
    throw Error(ErrorCode::InvalidArgument,
                "TangentVector: w not orthogonal to base (overlap " + std::to_string(overlap) + ")");
  }
}

TangentVector::TangentVector(Ray base, StateVector w, bool)
    : base_(std::move(base)), w_(std::move(w)) {}

TangentVector TangentVector::project(const Ray& base, const StateVector& v) {
  require_same_dim(base.dim(), v.size(), "TangentVector::project");
  const StateVector& l = base.rep();
  return TangentVector(base, v - inner(l, v) * l, true);
}

TangentVector TangentVector::zero(const Ray& base) {
  return TangentVector(base, StateVector::Zero(base.dim()), true);
}

TangentVector TangentVector::rotated() const {
  return TangentVector(base_, Complex(0.0, 1.0) * w_, true);
}

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  require_base(a.base(), b, "TangentVector::operator+");
  return TangentVector(a.base(), a.w() + b.w(), true);
}

TangentVector operator-(const TangentVector& a, const TangentVector& b) {
  require_base(a.base(), b, "TangentVector::operator-");
  return TangentVector(a.base(), a.w() - b.w(), true);
}

TangentVector operator*(Complex s, const TangentVector& a) {
  return TangentVector(a.base(), s * a.w(), true);
}

// ---------------------------------------------------------------------------
// Probability and distance

bool same_base(const Ray& a, const Ray& b, double tol) {
  return a.dim() == b.dim() && (a.rep() - b.rep()).norm() <= tol;
}

double transition_probability(const Ray& a, const Ray& b) {
  require_same_dim(a.dim(), b.dim(), "transition_probability");
  return std::min(1.0, std::norm(inner(a.rep(), b.rep())));
}

// cos d = 2p − 1 is evaluated as d = 2·atan2(sin(d/2), cos(d/2)) with
// cos(d/2) = |⟨a,b⟩| and sin(d/2) = ‖b − ⟨a,b⟩a‖; arccos loses half the
// digits near d = 0 and d = π.
double fs_distance(const Ray& a, const Ray& b) {
  require_same_dim(a.dim(), b.dim(), "fs_distance");
  const Complex c = inner(a.rep(), b.rep());
  const double s = (b.rep() - c * a.rep()).norm();
  return 2.0 * std::atan2(s, std::abs(c));
}

bool same_ray(const Ray& a, const Ray& b, double tol) { return fs_distance(a, b) <= tol; }

// ---------------------------------------------------------------------------
// Stereographic (Bloch) coordinates

double bloch_pairing(const BlochPoint& a, const BlochPoint& b) {
  return a.x * b.x + (std::conj(a.z) * b.z).real();
}

namespace {

void require_frame(const StateVector& e1, const StateVector& e2, Index dim) {
  require_same_dim(e1.size(), dim, "bloch frame");
  require_same_dim(e2.size(), dim, "bloch frame");
  if (std::abs(e1.norm() - 1.0) > kUnitTol || std::abs(e2.norm() - 1.0) > kUnitTol ||
      std::abs(inner(e1, e2)) > kUnitTol) {
    throw Error(ErrorCode::NonOrthonormalFrame, "bloch frame {e1, e2} is not orthonormal");
  }
}

}  // namespace

BlochPoint bloch_point(const StateVector& e1, const StateVector& e2, const Ray& ray) {
  require_frame(e1, e2, ray.dim());
  const StateVector& r = ray.rep();
  const Complex a = inner(e1, r);
  const Complex b = inner(e2, r);
  const double residual = (r - a * e1 - b * e2).norm();
  if (residual > kUnitTol) {
    throw Error(ErrorCode::NotInSpan, "ray leaves span{e1, e2} by " + std::to_string(residual));
  }
  // μ = b/a; both coordinates are written without dividing by a so that the
  // pole [e2] needs no special case.
  const double aa = std::norm(a);
  const double bb = std::norm(b);
  const double n2 = aa + bb;
  return {(bb - aa) / n2, 2.0 * b * std::conj(a) / n2};
}

Ray ray_from_bloch(const StateVector& e1, const StateVector& e2, const BlochPoint& point) {
  require_frame(e1, e2, e1.size());
  const double r = std::sqrt(point.x * point.x + std::norm(point.z));
  if (!(r > kUnitTol)) throw Error(ErrorCode::ZeroVector, "ray_from_bloch: zero point");
  const double x = point.x / r;
  const Complex z = point.z / r;
  Complex a;
  Complex b;
  if (x <= 0.0) {
    a = std::sqrt(0.5 * (1.0 - x));
    b = z / (2.0 * a);
  } else {
    b = std::sqrt(0.5 * (1.0 + x));
    a = std::conj(z) / (2.0 * b);
  }
  return Ray(a * e1 + b * e2);
}

// ---------------------------------------------------------------------------
// Exponential and graph charts

Ray exp_map(const Ray& base, const TangentVector& xi) {
  require_base(base, xi, "exp_map");
  const double r = xi.norm();
  if (r == 0.0) return base;
  return Ray(std::cos(0.5 * r) * base.rep() + (std::sin(0.5 * r) / r) * xi.w());
}

TangentVector log_map(const Ray& base, const Ray& target) {
  require_same_dim(base.dim(), target.dim(), "log_map");
  const StateVector& l = base.rep();
  const Complex c = inner(l, target.rep());
  if (std::norm(c) <= kUnitTol) {
    throw Error(ErrorCode::CutLocus, "log_map: target at distance π from base");
  }
  const double cos_half = std::abs(c);
  const StateVector aligned = target.rep() * (std::conj(c) / cos_half);
  const StateVector perp = aligned - cos_half * l;
  const double sin_half = perp.norm();
  if (sin_half == 0.0) return TangentVector::zero(base);
  const double d = 2.0 * std::atan2(sin_half, cos_half);
  return TangentVector::project(base, (d / sin_half) * perp);
}

Ray graph_ray(const Ray& base, const TangentVector& f) {
  require_base(base, f, "graph_ray");
  return Ray(base.rep() + f.w());
}

TangentVector graph_extract(const Ray& base, const Ray& target) {
  require_same_dim(base.dim(), target.dim(), "graph_extract");
  const StateVector& l = base.rep();
  const StateVector& m = target.rep();
  const Complex c = inner(l, m);
  if (std::norm(c) <= kUnitTol) {
    throw Error(ErrorCode::CutLocus, "graph_extract: target at distance π from base");
  }
  return TangentVector::project(base, (m - c * l) / c);
}

// ---------------------------------------------------------------------------
// Metric and curvature

Complex fs_metric(const TangentVector& a, const TangentVector& b) {
  require_base(a.base(), b, "fs_metric");
  return inner(a.w(), b.w());
}

double riemannian_metric(const TangentVector& a, const TangentVector& b) {
  return fs_metric(a, b).real();
}

TangentVector curvature(const Ray& base, const TangentVector& x, const TangentVector& y,
                        const TangentVector& z) {
  require_base(base, x, "curvature");
  require_base(base, y, "curvature");
  require_base(base, z, "curvature");
  const Complex i(0.0, 1.0);
  const StateVector& X = x.w();
  const StateVector& Y = y.w();
  const StateVector& Z = z.w();
  const StateVector IX = i * X;
  const StateVector IY = i * Y;
  auto g = [](const StateVector& a, const StateVector& b) { return inner(a, b).real(); };

  StateVector r = g(Y, Z) * X - g(X, Z) * Y + g(IY, Z) * IX - g(IX, Z) * IY - 2.0 * g(IX, Y) * (i * Z);
  return TangentVector::project(base, 0.25 * r);
}

Matrix orthonormal_complement(const Ray& base) {
  const Index n = base.dim();
  Eigen::HouseholderQR<Matrix> qr(Matrix(base.rep()));
  Matrix q = qr.householderQ();
  return q.rightCols(n - 1);
}

}  // namespace wignerkit
