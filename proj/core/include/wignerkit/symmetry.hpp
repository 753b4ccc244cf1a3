// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file symmetry.hpp
 * @brief Unitary and antiunitary operators, i.e. the group G(H).
 *
 * An antiunitary operator is stored as S = U∘K with U a unitary matrix and K
 * entrywise complex conjugation in the standard basis. Composition follows
 * from K·U = conj(U)·K, so scalars do not commute with antiunitary elements.
 */

#pragma once

#include "wignerkit/state_space.hpp"
#include "wignerkit/types.hpp"

#include <cstdint>
#include <string_view>

namespace wignerkit {

enum class Grading : int { unitary = 0, antiunitary = 1 };

/// Z/2 group law on gradings.
constexpr Grading operator*(Grading a, Grading b) {
  return static_cast<Grading>(static_cast<int>(a) ^ static_cast<int>(b));
}
constexpr int grading_bit(Grading g) { return static_cast<int>(g); }
std::string_view to_string(Grading g);

/// Element of G(H): v ↦ U·v (unitary) or v ↦ U·conj(v) (antiunitary).
class SymmetryOp {
 public:
  /// Throws NotUnitary unless ‖U†U − I‖_max ≤ 1e-10.
  SymmetryOp(Matrix u, Grading grading);

  static SymmetryOp identity(Index dim);
  /// Complex conjugation K in the standard basis.
  static SymmetryOp conjugation(Index dim);

  Index dim() const noexcept { return u_.rows(); }
  const Matrix& matrix() const noexcept { return u_; }
  Grading grading() const noexcept { return grading_; }
  bool is_antiunitary() const noexcept { return grading_ == Grading::antiunitary; }

 private:
  Matrix u_;
  Grading grading_;
};

/// ‖U†U − I‖_max.
double unitarity_defect(const Matrix& u);

StateVector apply_vector(const SymmetryOp& s, const StateVector& v);
Ray apply_ray(const SymmetryOp& s, const Ray& ray);

/// S₁∘S₂.
SymmetryOp compose(const SymmetryOp& s1, const SymmetryOp& s2);
SymmetryOp inverse(const SymmetryOp& s);

/// λ·S for a unit scalar λ (scalar applied after S).
SymmetryOp scaled(Complex lambda, const SymmetryOp& s);

/// Representative of S·T with the largest-modulus matrix entry real and
/// positive (ties within 1e-12 broken by lowest column-major index).
SymmetryOp canonical_phase(const SymmetryOp& s);

struct PhaseEquivalence {
  bool equal = false;
  Complex phase{1.0, 0.0};  ///< U₂ = phase·U₁ when equal
  double deviation = 0.0;   ///< max |U₂ − phase·U₁|
};

PhaseEquivalence equal_up_to_phase(const SymmetryOp& s1, const SymmetryOp& s2,
                                   double tol = 1e-10);

/// Haar-distributed unitary matrix, deterministic in `seed`, with the given grading.
SymmetryOp random_symmetry(Index dim, Grading grading, std::uint64_t seed);

/// True iff S fixes `samples` seeded random rays and every probe ray to within
/// fs distance `tol`. Throws DimTooSmall for dim < 2.
bool scalar_kernel_check(const SymmetryOp& s, int samples, std::uint64_t seed, double tol = 1e-9);

}  // namespace wignerkit
