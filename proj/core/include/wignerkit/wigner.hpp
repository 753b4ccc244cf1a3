// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file wigner.hpp
 * @brief Reconstruction of the unitary or antiunitary operator inducing a
 *        probability-preserving map of rays.
 *
 * The map is presented by its values on the probe rays of probes.hpp. The
 * lift is built in four steps:
 *
 *   1. fix_base_point      – compose with a Householder reflection so that
 *                            the image of [e₁] is [e₁];
 *   2. extract_real_linear – read off, in graph coordinates at [e₁], the
 *                            images w_k = S(e_k) and w′_k = S(i·e_k) of the
 *                            real-linear isometry S of e₁⊥;
 *   3. detect_linearity    – decide S(iξ) = +iS(ξ) (linear, unitary lift)
 *                            versus S(iξ) = −iS(ξ) (antilinear);
 *   4. assemble_lift       – extend S by the identity on [e₁] and undo the
 *                            Householder step.
 *
 * Graph coordinates fix the phase of each w_k relative to e₁, so the columns
 * come out phase-aligned and the linearity test needs no per-column gauge.
 * The result is unique up to a unit scalar; it is returned with its
 * largest-modulus entry real and positive.
 */

#pragma once

#include "wignerkit/probes.hpp"
#include "wignerkit/symmetry.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace wignerkit {

inline constexpr double kDefaultSymmetryTol = 1e-8;

/// Stage labels carried by NotASymmetry errors.
namespace stage {
inline constexpr std::string_view kProbeConsistency = "probe-consistency";
inline constexpr std::string_view kExtractRealLinear = "extract-real-linear";
inline constexpr std::string_view kDetectLinearity = "detect-linearity";
inline constexpr std::string_view kAssembleLift = "assemble-lift";
inline constexpr std::string_view kVerify = "verify";
}  // namespace stage

inline constexpr std::string_view kGaugeConvention = "largest-entry-real-positive";

/// Images of the probe rays under a ray-space map. `a[k]`, `b[k]`, `v[k]` are
/// the images of A_{k+2}, B_{k+2}, V_{k+2}.
struct ProbeTable {
  Index dim = 0;
  Ray base;
  std::vector<Ray> a;
  std::vector<Ray> b;
  std::optional<std::vector<Ray>> v;
  double tolerance = kDefaultSymmetryTol;
};

/// Throws InvalidArgument if counts or dimensions are inconsistent.
void validate_shape(const ProbeTable& table);

/// Largest deviation of the table from p(base, A_k) = p(base, B_k) = 1/2 and
/// p(base, V_k) = 0.
double probe_consistency(const ProbeTable& table);

ProbeTable make_probe_table(const SymmetryOp& s);

struct BaseFixing {
  SymmetryOp u0;  ///< unitary with apply_ray(u0, table.base) = [e₁]
  ProbeTable table;
};

BaseFixing fix_base_point(const ProbeTable& table);

struct RealLinearData {
  SymmetryOp u0;
  std::vector<StateVector> w;    ///< S(e_k), k = 2..n
  std::vector<StateVector> w_i;  ///< S(i·e_k)
  double norm_deviation = 0.0;   ///< max | ‖w‖ − 1 | over both families
};

/// Throws CutLocus for a probe image orthogonal to [e₁], NormDeviation if a
/// recovered vector is not unit within `tol`.
RealLinearData extract_real_linear(const BaseFixing& fixed, double tol = kDefaultSymmetryTol);

struct LinearityVerdict {
  Grading grading = Grading::unitary;
  double alpha_residual = 0.0;    ///< Σ_k ‖w′_k ∓ i·w_k‖ for the chosen sign
  double rejected_residual = 0.0; ///< the same sum for the other sign
};

/// Throws Ambiguous if the two residuals are within `tol` of each other.
LinearityVerdict detect_linearity(const RealLinearData& data, double tol = kDefaultSymmetryTol);

struct AssembledLift {
  SymmetryOp lift;
  double orthonormality = 0.0;  ///< max |Ŝ†Ŝ − I| before re-unitarization
};

/// Throws NonUnitary if the recovered columns fail orthonormality beyond `tol`.
AssembledLift assemble_lift(const RealLinearData& data, Grading grading,
                            double tol = kDefaultSymmetryTol);

struct LiftResiduals {
  double probe_max = 0.0;
  double orthonormality = 0.0;
  double alpha_consistency = 0.0;
};

struct LiftReport {
  SymmetryOp lift;
  LiftResiduals residuals;
  double tolerance = kDefaultSymmetryTol;

  Grading grading() const { return lift.grading(); }
  bool accepted() const {
    return residuals.probe_max <= tolerance && residuals.orthonormality <= tolerance &&
           residuals.alpha_consistency <= tolerance;
  }
};

/// Full pipeline. Throws NotASymmetry (with the failing stage) if any stage's
/// residual exceeds table.tolerance, DimTooSmall for dim < 2.
LiftReport wigner_lift(const ProbeTable& table);

struct VerifyReport {
  double probe_max = 0.0;       ///< max fs distance, tabled image vs apply_ray(S, probe)
  double pair_deviation = 0.0;  ///< max |p(SL₁, SL₂) − p(L₁, L₂)| over random pairs
  int probes = 0;
  int pairs = 0;
};

VerifyReport verify_lift(const SymmetryOp& s, const ProbeTable& table, int extra_samples,
                         std::uint64_t seed);

}  // namespace wignerkit
