// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file extension.hpp
 * @brief Extension data of a finite group acting by ray symmetries.
 *
 * Lifting every element g to an operator L_g ∈ G(H) gives
 *
 *   grading(g) = 0 if L_g is unitary, 1 if antiunitary   (a map G → Z/2)
 *   L_g ∘ L_h  = mu(g,h) · L_{gh}                         (mu(g,h) ∈ U(1))
 *
 * and associativity of composition forces the twisted cocycle identity
 *
 *   mu(g,h)·mu(gh,k) = τ_g(mu(h,k))·mu(g,hk),   τ_g = conjugation iff grading(g) = 1.
 *
 * Rescaling the section L_g ↦ β(g)·L_g changes mu by a twisted coboundary;
 * the grading never changes.
 */

#pragma once

#include "wignerkit/symmetry.hpp"
#include "wignerkit/wigner.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wignerkit {

/// Multiplication table of a finite group on labels 0..m−1, 0 the identity.
class GroupTable {
 public:
  /// Throws InvalidGroup unless the table is a group law with identity 0.
  explicit GroupTable(std::vector<std::vector<int>> mult);

  int order() const noexcept { return static_cast<int>(mult_.size()); }
  int mult(int g, int h) const { return mult_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inverse(int g) const;
  const std::vector<std::vector<int>>& table() const noexcept { return mult_; }

  /// Z/m with k ↦ k.
  static GroupTable cyclic(int m);

 private:
  std::vector<std::vector<int>> mult_;
};

/// lifts[g] is the lift of element g.
using LiftFamily = std::vector<SymmetryOp>;

/// wigner_lift of every table; the identity's lift is normalized to exactly I.
/// A rejection rethrows NotASymmetry with the element label prefixed.
LiftFamily lift_family(std::span<const ProbeTable> tables);

struct GradingResult {
  std::vector<int> grading;
  int violations = 0;  ///< number of pairs (g,h) with grading(gh) ≠ grading(g) + grading(h)
};

/// Throws NotAHomomorphism if any pair violates the homomorphism property.
GradingResult grading_homomorphism(const LiftFamily& lifts, const GroupTable& group);

struct GradedCocycle {
  std::vector<int> grading;
  Matrix mu;  ///< mu(g, h)
};

/// Throws NotProjective if some L_g∘L_h is not a unit multiple of L_{gh}.
GradedCocycle cocycle_table(const LiftFamily& lifts, const GroupTable& group,
                            double tol = kDefaultSymmetryTol);

/// max over (g,h,k) of |mu(g,h)·mu(gh,k) − τ_g(mu(h,k))·mu(g,hk)|.
double twisted_cocycle_check(const GradedCocycle& cocycle, const GroupTable& group);

/// L_g ↦ phases[g]·L_g, with the identity's phase forced to 1.
LiftFamily rephase_section(const LiftFamily& lifts, std::span<const Complex> phases);

/// For an antiunitary S = U∘K: the scalar c with U·conj(U) = c·I when S∘S is
/// scalar within `tol`. c = ±1 and does not depend on the phase of U.
std::optional<Complex> antiunitary_square(const SymmetryOp& s, double tol = 1e-12);

struct CoboundarySearch {
  bool trivializable = false;
  double min_residual = 0.0;      ///< best max |β(g)τ_g(β(h))mu(g,h) − β(gh)| found
  std::vector<Complex> cochain;   ///< the best β found
};

/// Approximate test for a cochain β with mu = δβ: grid search over the values
/// of β on `generators` (about `grid_points` candidates in total) followed by
/// local refinement. Groups of order ≤ 8 with at most 3 generators only;
/// std::nullopt otherwise.
std::optional<CoboundarySearch> search_trivializing_cochain(const GradedCocycle& cocycle,
                                                            const GroupTable& group,
                                                            std::span<const int> generators,
                                                            int grid_points = 10000);

}  // namespace wignerkit
