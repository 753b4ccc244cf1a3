// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state_space.hpp
 * @brief Rays of a finite-dimensional Hilbert space and the Fubini–Study
 *        geometry of projective space.
 *
 * Normalization: the distance d between rays satisfies cos d = 2p − 1, so
 * CP¹ is the round sphere of radius one and the holomorphic sectional
 * curvature is one. Tangent vectors at a ray L are stored as vectors
 * w ⊥ L.rep with ‖w‖ equal to the geodesic speed in this metric; the
 * geodesic through L with velocity w is t ↦ [cos(t‖w‖/2)ℓ + sin(t‖w‖/2)ŵ].
 *
 * Two coordinate charts centred at L are provided:
 *   - exponential:  ξ ↦ exp_map(L, ξ)
 *   - graph:        f ↦ [ℓ + f]  (the line spanned by the graph of f)
 * They differ by the radial reparametrization ρ(r) = 2·arctan(r).
 */

#pragma once

#include "wignerkit/types.hpp"

#include <array>
#include <cmath>

namespace wignerkit {

/// A point of projective space: a nonzero vector modulo scale, stored as its
/// canonical representative (unit norm, largest-modulus entry real and ≥ 0,
/// ties within 1e-12 broken by lowest index).
class Ray {
 public:
  /// Canonicalizes `v`; throws ZeroVector if ‖v‖ ≤ 1e-12.
  explicit Ray(const StateVector& v);

  /// The ray [e_k] of the standard basis vector (k is zero-based).
  static Ray basis(Index dim, Index k);

  const StateVector& rep() const noexcept { return rep_; }
  Index dim() const noexcept { return rep_.size(); }

 private:
  StateVector rep_;
};

Ray canonical_representative(const StateVector& v);

/// An element of T_L PH ≅ Hom(L, L⊥) ≅ L⊥, stored as w = f(ℓ).
class TangentVector {
 public:
  /// Requires |⟨base.rep, w⟩| ≤ 1e-12 (InvalidArgument otherwise).
  TangentVector(Ray base, StateVector w);

  /// Orthogonal projection of an arbitrary vector onto L⊥.
  static TangentVector project(const Ray& base, const StateVector& v);
  static TangentVector zero(const Ray& base);

  const Ray& base() const noexcept { return base_; }
  const StateVector& w() const noexcept { return w_; }
  double norm() const { return w_.norm(); }

  /// The complex structure I: multiplication by i on w.
  TangentVector rotated() const;

  friend TangentVector operator+(const TangentVector& a, const TangentVector& b);
  friend TangentVector operator-(const TangentVector& a, const TangentVector& b);
  friend TangentVector operator*(Complex s, const TangentVector& a);

 private:
  TangentVector(Ray base, StateVector w, bool /*unchecked*/);

  Ray base_;
  StateVector w_;
};

/// Point of the unit sphere S² ⊂ R × C.
struct BlochPoint {
  double x = 0.0;
  Complex z{0.0, 0.0};

  std::array<double, 3> cartesian() const { return {x, z.real(), z.imag()}; }
  static BlochPoint from_cartesian(const std::array<double, 3>& c) {
    return {c[0], Complex(c[1], c[2])};
  }
};

/// Euclidean pairing x₁x₂ + Re(z̄₁z₂) of two points of R × C.
double bloch_pairing(const BlochPoint& a, const BlochPoint& b);

/// True iff the two rays have the same canonical representative within `tol`.
bool same_base(const Ray& a, const Ray& b, double tol = 1e-10);

/// p(L₁,L₂) = |⟨ψ₁,ψ₂⟩|² for unit representatives.
double transition_probability(const Ray& a, const Ray& b);

/// Fubini–Study distance, d = arccos(2p − 1) ∈ [0, π].
double fs_distance(const Ray& a, const Ray& b);

/// True iff fs_distance(a, b) ≤ tol.
bool same_ray(const Ray& a, const Ray& b, double tol = 1e-10);

/// Stereographic coordinates of a ray in the complex line P(span{e1, e2}):
/// [e1 + μe2] ↦ ((|μ|²−1)/(|μ|²+1), 2μ/(|μ|²+1)), [e2] ↦ (1, 0).
BlochPoint bloch_point(const StateVector& e1, const StateVector& e2, const Ray& ray);

/// Inverse of bloch_point for the same frame.
Ray ray_from_bloch(const StateVector& e1, const StateVector& e2, const BlochPoint& point);

Ray exp_map(const Ray& base, const TangentVector& xi);

/// Inverse of exp_map away from the cut locus; throws CutLocus if p ≤ 1e-12.
TangentVector log_map(const Ray& base, const Ray& target);

/// Γ_f = [ℓ + f(ℓ)].
Ray graph_ray(const Ray& base, const TangentVector& f);

/// The unique f with graph_ray(base, f) = target; throws CutLocus if p ≤ 1e-12.
TangentVector graph_extract(const Ray& base, const Ray& target);

/// Radial reparametrization taking graph coordinates to exponential ones.
inline double graph_radius_to_distance(double r) { return 2.0 * std::atan(r); }

/// Hermitian metric ⟨f₁, f₂⟩; its real part is the Riemannian metric.
Complex fs_metric(const TangentVector& a, const TangentVector& b);
double riemannian_metric(const TangentVector& a, const TangentVector& b);

/// Riemann tensor R(X,Y)Z of constant holomorphic sectional curvature one.
TangentVector curvature(const Ray& base, const TangentVector& x, const TangentVector& y,
                        const TangentVector& z);

/// Finite-difference evaluation of R(X,Y)Z from the metric pulled back to
/// graph coordinates. Independent of curvature(); agrees with it to O(h²).
/// Throws StepOutOfRange unless h ∈ [1e-4, 1e-2].
TangentVector curvature_fd_oracle(const Ray& base, const TangentVector& x,
                                  const TangentVector& y, const TangentVector& z, double h);

/// dim × (dim−1) matrix whose columns are an orthonormal basis of L⊥.
Matrix orthonormal_complement(const Ray& base);

}  // namespace wignerkit
