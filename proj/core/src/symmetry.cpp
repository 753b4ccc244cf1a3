// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/symmetry.hpp"

#include "wignerkit/error.hpp"
#include "wignerkit/probes.hpp"
#include "wignerkit/sampling.hpp"

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

// Largest-modulus entry in column-major order, lowest index on ties.
Index dominant_entry(const Matrix& u) {
  const double max_mod = u.cwiseAbs().maxCoeff();
  Index k = 0;
  while (std::abs(u.data()[k]) < max_mod - kUnitTol) ++k;
  return k;
}

}  // namespace

std::string_view to_string(Grading g) {
  return g == Grading::unitary ? "unitary" : "antiunitary";
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

SymmetryOp::SymmetryOp(Matrix u, Grading grading) : u_(std::move(u)), grading_(grading) {
  if (u_.rows() < 1 || u_.rows() != u_.cols()) {
    throw Error(ErrorCode::InvalidArgument, "SymmetryOp: matrix must be square and nonempty");
  }
  const double defect = unitarity_defect(u_);
  if (!(defect <= 1e-10)) {
    throw Error(ErrorCode::NotUnitary, "SymmetryOp: |U†U − I| = " + std::to_string(defect));
  }
}

SymmetryOp SymmetryOp::identity(Index dim) {
  return SymmetryOp(Matrix::Identity(dim, dim), Grading::unitary);
}

SymmetryOp SymmetryOp::conjugation(Index dim) {
  return SymmetryOp(Matrix::Identity(dim, dim), Grading::antiunitary);
}

StateVector apply_vector(const SymmetryOp& s, const StateVector& v) {
  require_same_dim(s.dim(), v.size(), "apply_vector");
  if (s.is_antiunitary()) return s.matrix() * v.conjugate();
  return s.matrix() * v;
}

Ray apply_ray(const SymmetryOp& s, const Ray& ray) { return Ray(apply_vector(s, ray.rep())); }

SymmetryOp compose(const SymmetryOp& s1, const SymmetryOp& s2) {
  require_same_dim(s1.dim(), s2.dim(), "compose");
  // U₁K·U₂ = U₁·conj(U₂)·K
  Matrix u = s1.is_antiunitary() ? Matrix(s1.matrix() * s2.matrix().conjugate())
                                 : Matrix(s1.matrix() * s2.matrix());
  return SymmetryOp(std::move(u), s1.grading() * s2.grading());
}

SymmetryOp inverse(const SymmetryOp& s) {
  // (UK)⁻¹ = K·U† = conj(U†)·K = Uᵀ·K
  if (s.is_antiunitary()) return SymmetryOp(s.matrix().transpose(), s.grading());
  return SymmetryOp(s.matrix().adjoint(), s.grading());
}

SymmetryOp scaled(Complex lambda, const SymmetryOp& s) {
  return SymmetryOp(lambda * s.matrix(), s.grading());
}

SymmetryOp canonical_phase(const SymmetryOp& s) {
  const Index k = dominant_entry(s.matrix());
  const Complex entry = s.matrix().data()[k];
  Matrix u = s.matrix() * (std::conj(entry) / std::abs(entry));
  u.data()[k] = Complex(std::abs(entry), 0.0);
  return SymmetryOp(std::move(u), s.grading());
}

PhaseEquivalence equal_up_to_phase(const SymmetryOp& s1, const SymmetryOp& s2, double tol) {
  require_same_dim(s1.dim(), s2.dim(), "equal_up_to_phase");
  PhaseEquivalence out;
  if (s1.grading() != s2.grading()) {
    out.deviation = std::numeric_limits<double>::infinity();
    return out;
  }
  const Index k = dominant_entry(s2.matrix());
  const Complex ratio = s2.matrix().data()[k] / s1.matrix().data()[k];
  const double mod = std::abs(ratio);
  if (mod == 0.0 || !std::isfinite(mod)) {
    out.deviation = std::numeric_limits<double>::infinity();
    return out;
  }
  out.phase = ratio / mod;
  out.deviation = (s2.matrix() - out.phase * s1.matrix()).cwiseAbs().maxCoeff();
  out.equal = out.deviation <= tol;
  return out;
}

SymmetryOp random_symmetry(Index dim, Grading grading, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "random_symmetry: dim must be positive");
  Rng rng(seed);
  return SymmetryOp(haar_unitary(dim, rng), grading);
}

bool scalar_kernel_check(const SymmetryOp& s, int samples, std::uint64_t seed, double tol) {
  if (s.dim() < 2) throw Error(ErrorCode::DimTooSmall, "scalar_kernel_check: dim must be ≥ 2");
  auto fixes = [&](const Ray& ray) { return fs_distance(apply_ray(s, ray), ray) <= tol; };

  const ProbeRays probes = standard_probes(s.dim());
  if (!fixes(probes.base)) return false;
  for (const auto* family : {&probes.a, &probes.b, &probes.v}) {
    for (const Ray& ray : *family) {
      if (!fixes(ray)) return false;
    }
  }
  Rng rng(seed);
  for (int n = 0; n < samples; ++n) {
    if (!fixes(random_ray(s.dim(), rng))) return false;
  }
  return true;
}

}  // namespace wignerkit
