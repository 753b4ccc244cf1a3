// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/wigner.hpp"

#include "wignerkit/error.hpp"
#include "wignerkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wignerkit {

namespace {

std::string label(char family, std::size_t k) {
  return std::string(1, family) + "[" + std::to_string(k + 2) + "]";
}

[[noreturn]] void reject(std::string_view stage_name, const std::string& message) {
  throw Error(ErrorCode::NotASymmetry, message, std::string(stage_name));
}

std::vector<Ray> push_through(const SymmetryOp& s, const std::vector<Ray>& rays) {
  std::vector<Ray> out;
  out.reserve(rays.size());
  for (const Ray& r : rays) out.push_back(apply_ray(s, r));
  return out;
}

}  // namespace

void validate_shape(const ProbeTable& table) {
  const Index n = table.dim;
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); };
  if (n < 1) fail("probe table: dim must be positive");
  if (table.base.dim() != n) fail("probe table: base has wrong dimension");
  const auto expected = static_cast<std::size_t>(n - 1);
  auto check = [&](const std::vector<Ray>& rays, char family) {
    if (rays.size() != expected) {
      fail(std::string("probe table: family ") + family + " needs " + std::to_string(expected) +
           " rays, got " + std::to_string(rays.size()));
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (rays[k].dim() != n) fail("probe table: " + label(family, k) + " has wrong dimension");
    }
  };
  check(table.a, 'A');
  check(table.b, 'B');
  if (table.v) check(*table.v, 'V');
  if (!(table.tolerance > 0.0)) fail("probe table: tolerance must be positive");
}

double probe_consistency(const ProbeTable& table) {
  double worst = 0.0;
  for (const Ray& r : table.a) worst = std::max(worst, std::abs(transition_probability(table.base, r) - 0.5));
  for (const Ray& r : table.b) worst = std::max(worst, std::abs(transition_probability(table.base, r) - 0.5));
  if (table.v) {
    for (const Ray& r : *table.v) worst = std::max(worst, transition_probability(table.base, r));
  }
  return worst;
}

ProbeTable make_probe_table(const SymmetryOp& s) {
  if (s.dim() < 2) throw Error(ErrorCode::DimTooSmall, "make_probe_table: dim must be ≥ 2");
  const ProbeRays probes = standard_probes(s.dim());
  return ProbeTable{s.dim(), apply_ray(s, probes.base), push_through(s, probes.a),
                    push_through(s, probes.b), push_through(s, probes.v), kDefaultSymmetryTol};
}

BaseFixing fix_base_point(const ProbeTable& table) {
  const Index n = table.dim;
  StateVector a = table.base.rep();
  const double mod = std::abs(a[0]);
  if (mod > 0.0) a *= std::conj(a[0]) / mod;

  StateVector v = a;
  v[0] -= 1.0;
  Matrix u0 = Matrix::Identity(n, n);
  const double vv = v.squaredNorm();
  if (std::sqrt(vv) > kUnitTol) u0 -= (2.0 / vv) * (v * v.adjoint());

  SymmetryOp reflection(std::move(u0), Grading::unitary);
  ProbeTable fixed{n, apply_ray(reflection, table.base), push_through(reflection, table.a),
                   push_through(reflection, table.b), std::nullopt, table.tolerance};
  if (table.v) fixed.v = push_through(reflection, *table.v);
  return BaseFixing{std::move(reflection), std::move(fixed)};
}

RealLinearData extract_real_linear(const BaseFixing& fixed, double tol) {
  const ProbeTable& t = fixed.table;
  const Ray e1 = Ray::basis(t.dim, 0);
  if (!same_base(t.base, e1)) {
    throw Error(ErrorCode::InvalidArgument, "extract_real_linear: table base is not [e1]");
  }
  RealLinearData data{fixed.u0, {}, {}, 0.0};
  for (std::size_t k = 0; k < t.a.size(); ++k) {
    data.w.push_back(graph_extract(e1, t.a[k]).w());
    data.w_i.push_back(graph_extract(e1, t.b[k]).w());
    data.norm_deviation = std::max({data.norm_deviation, std::abs(data.w.back().norm() - 1.0),
                                    std::abs(data.w_i.back().norm() - 1.0)});
  }
  if (data.norm_deviation > tol) {
    throw Error(ErrorCode::NormDeviation,
                "graph coordinates of probe images deviate from unit norm by " +
                    std::to_string(data.norm_deviation));
  }
  return data;
}

LinearityVerdict detect_linearity(const RealLinearData& data, double tol) {
  const Complex i(0.0, 1.0);
  double linear = 0.0;
  double antilinear = 0.0;
  for (std::size_t k = 0; k < data.w.size(); ++k) {
    linear += (data.w_i[k] - i * data.w[k]).norm();
    antilinear += (data.w_i[k] + i * data.w[k]).norm();
  }
  if (std::abs(linear - antilinear) <= tol) {
    throw Error(ErrorCode::Ambiguous, "S(iξ) = ±iS(ξ) cannot be decided: residuals " +
                                          std::to_string(linear) + " and " +
                                          std::to_string(antilinear));
  }
  if (linear < antilinear) return {Grading::unitary, linear, antilinear};
  return {Grading::antiunitary, antilinear, linear};
}

AssembledLift assemble_lift(const RealLinearData& data, Grading grading, double tol) {
  const auto n = static_cast<Index>(data.w.size() + 1);
  // For both gradings the matrix part of Ŝ has columns Ŝe_k, since K fixes e_k.
  Matrix s = Matrix::Zero(n, n);
  s(0, 0) = 1.0;
  for (Index k = 1; k < n; ++k) s.col(k) = data.w[static_cast<std::size_t>(k - 1)];

  const double defect = unitarity_defect(s);
  if (defect > tol) {
    throw Error(ErrorCode::NonUnitary,
                "recovered columns fail orthonormality by " + std::to_string(defect));
  }
  // Nearest unitary (polar factor); a no-op up to roundoff for exact tables.
  Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SymmetryOp fixed_lift(svd.matrixU() * svd.matrixV().adjoint(), grading);

  return {canonical_phase(compose(inverse(data.u0), fixed_lift)), defect};
}

LiftReport wigner_lift(const ProbeTable& table) {
  validate_shape(table);
  if (table.dim < 2) throw Error(ErrorCode::DimTooSmall, "wigner_lift: dim must be ≥ 2");
  const double tol = table.tolerance;

  const double consistency = probe_consistency(table);
  if (consistency > tol) {
    reject(stage::kProbeConsistency,
           "probe images violate the transition-probability pattern by " +
               std::to_string(consistency));
  }

  const BaseFixing fixed = fix_base_point(table);

  std::optional<RealLinearData> data;
  try {
    data = extract_real_linear(fixed, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CutLocus && e.code() != ErrorCode::NormDeviation) throw;
    reject(stage::kExtractRealLinear, e.what());
  }

  LinearityVerdict verdict;
  try {
    verdict = detect_linearity(*data, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Ambiguous) throw;
    reject(stage::kDetectLinearity, e.what());
  }
  if (verdict.alpha_residual > tol) {
    reject(stage::kDetectLinearity, "neither linear nor antilinear: residual " +
                                        std::to_string(verdict.alpha_residual));
  }

  std::optional<AssembledLift> assembled;
  try {
    assembled = assemble_lift(*data, verdict.grading, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonUnitary) throw;
    reject(stage::kAssembleLift, e.what());
  }

  const VerifyReport check = verify_lift(assembled->lift, table, 0, 0);
  if (check.probe_max > tol) {
    reject(stage::kVerify,
           "lift misses a tabled image by fs distance " + std::to_string(check.probe_max));
  }

  return LiftReport{assembled->lift,
                    {check.probe_max, assembled->orthonormality, verdict.alpha_residual},
                    tol};
}

VerifyReport verify_lift(const SymmetryOp& s, const ProbeTable& table, int extra_samples,
                         std::uint64_t seed) {
  validate_shape(table);
  if (s.dim() != table.dim) {
    throw Error(ErrorCode::DimMismatch, "verify_lift: operator and table dimensions differ");
  }
  VerifyReport report;
  const ProbeRays probes = standard_probes(table.dim);
  auto compare = [&](const Ray& probe, const Ray& image) {
    report.probe_max = std::max(report.probe_max, fs_distance(apply_ray(s, probe), image));
    ++report.probes;
  };
  compare(probes.base, table.base);
  for (std::size_t k = 0; k < table.a.size(); ++k) compare(probes.a[k], table.a[k]);
  for (std::size_t k = 0; k < table.b.size(); ++k) compare(probes.b[k], table.b[k]);
  if (table.v) {
    for (std::size_t k = 0; k < table.v->size(); ++k) compare(probes.v[k], (*table.v)[k]);
  }

  Rng rng(seed);
  for (int n = 0; n < extra_samples; ++n) {
    const Ray l1 = random_ray(table.dim, rng);
    const Ray l2 = random_ray(table.dim, rng);
    const double before = transition_probability(l1, l2);
    const double after = transition_probability(apply_ray(s, l1), apply_ray(s, l2));
    report.pair_deviation = std::max(report.pair_deviation, std::abs(after - before));
    ++report.pairs;
  }
  return report;
}

}  // namespace wignerkit
