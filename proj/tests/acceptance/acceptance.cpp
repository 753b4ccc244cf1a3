// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include "wignerkit/error.hpp"
#include "wignerkit/extension.hpp"
#include "wignerkit/sampling.hpp"
#include "wignerkit/state_space.hpp"
#include "wignerkit/symmetry.hpp"
#include "wignerkit/wigner.hpp"

#ifdef WIGNERKIT_HAVE_CLI
#include "wignerkit/cli/json_io.hpp"
#endif

#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace wk = wignerkit;
using wk::Complex;
using wk::Grading;
using wk::Index;
using wk::Matrix;
using wk::Ray;
using wk::Rng;
using wk::StateVector;
using wk::SymmetryOp;
using wk::TangentVector;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double log_uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log10(lo), std::log10(hi));
  return std::pow(10.0, u(rng));
}

Complex random_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * wk::testing::kPi);
  return std::polar(1.0, u(rng));
}

// ---------------------------------------------------------------------------

Outcome distance_probability_identity() {
  const double tol = 1e-12;
  auto deviation = [](const Ray& a, const Ray& b) {
    return std::abs(std::cos(wk::fs_distance(a, b)) - (2.0 * wk::transition_probability(a, b) - 1.0));
  };
  double worst = 0.0;
  long pairs = 0;
  bool orthogonal_exact = true;
  for (Index dim : {2, 3, 4, 8, 16}) {
    Rng rng(100 + dim);
    for (int n = 0; n < 10000; ++n) {
      worst = std::max(worst, deviation(wk::random_ray(dim, rng), wk::random_ray(dim, rng)));
      ++pairs;
    }
    // Forced orthogonal pairs: λ = 0 in the two-plane they span.
    for (int n = 0; n < 100; ++n) {
      const auto [e1, e2] = wk::testing::random_frame(dim, rng);
      const Ray a(e1);
      const Ray b(e2);
      worst = std::max(worst, deviation(a, b));
      ++pairs;
    }
    for (Index k = 1; k < dim; ++k) {
      const Ray a = Ray::basis(dim, 0);
      const Ray b = Ray::basis(dim, k);
      orthogonal_exact = orthogonal_exact && wk::transition_probability(a, b) == 0.0 &&
                         std::abs(wk::fs_distance(a, b) - wk::testing::kPi) <= 1e-15;
      worst = std::max(worst, deviation(a, b));
      ++pairs;
    }
  }
  return {worst <= tol && orthogonal_exact,
          "max |cos d - (2p-1)| = " + sci(worst) + " over " + std::to_string(pairs) +
              " pairs (tol 1e-12); basis pairs give p = 0, d = pi: " + (orthogonal_exact ? "yes" : "no")};
}

Outcome stereographic_cross_check() {
  Rng rng(200);
  double pairing_dev = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const auto [e1, e2] = wk::testing::random_frame(8, rng);
    const StateVector c1 = wk::gaussian_vector(2, rng);
    const StateVector c2 = wk::gaussian_vector(2, rng);
    const Ray r1(c1[0] * e1 + c1[1] * e2);
    const Ray r2(c2[0] * e1 + c2[1] * e2);
    const double pairing = wk::bloch_pairing(wk::bloch_point(e1, e2, r1), wk::bloch_point(e1, e2, r2));
    pairing_dev = std::max(pairing_dev, std::abs(std::cos(wk::fs_distance(r1, r2)) - pairing));
  }

  // L1 = [e1], L2 = [λe1 + e2].
  double lambda_dev = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const auto [e1, e2] = wk::testing::random_frame(8, rng);
    const Complex lambda = log_uniform(rng, 1e-3, 1e3) * random_phase(rng);
    const double m = std::norm(lambda);
    const Ray l1(e1);
    const Ray l2(lambda * e1 + e2);
    const double p = wk::transition_probability(l1, l2);
    const double cos_d = std::cos(wk::fs_distance(l1, l2));
    const wk::BlochPoint b1 = wk::bloch_point(e1, e2, l1);
    const wk::BlochPoint b2 = wk::bloch_point(e1, e2, l2);
    lambda_dev = std::max({lambda_dev, std::abs(p - m / (m + 1.0)), std::abs(cos_d - (m - 1.0) / (m + 1.0)),
                           std::abs(b1.x + 1.0), std::abs(b1.z),
                           std::abs(b2.x + (m - 1.0) / (m + 1.0)),
                           std::abs(b2.z - 2.0 * m / (m + 1.0) / lambda)});
  }
  return {pairing_dev <= 1e-10 && lambda_dev <= 1e-12,
          "pairing dev " + sci(pairing_dev) + " (tol 1e-10) over 1000 pairs in C^8; lambda formulas dev " +
              sci(lambda_dev) + " (tol 1e-12) over 1000 lambdas"};
}

Outcome wigner_round_trip() {
  int cases[2] = {0, 0};
  int failures = 0;
  double worst = 0.0;
  for (Index dim = 2; dim <= 16; ++dim) {
    for (int g = 0; g < 2; ++g) {
      for (int n = 0; n < 68; ++n) {
        const auto grading = static_cast<Grading>(g);
        const SymmetryOp s = wk::random_symmetry(dim, grading, 1'000'000 + 10'000 * dim + 100 * n + g);
        ++cases[g];
        try {
          const wk::LiftReport report = wk::wigner_lift(wk::make_probe_table(s));
          const auto eq = wk::equal_up_to_phase(s, report.lift, 1e-8);
          worst = std::max(worst, eq.deviation);
          if (!report.accepted() || report.grading() != grading || !eq.equal) ++failures;
        } catch (const wk::Error&) {
          ++failures;
        }
      }
    }
  }
  return {failures == 0 && cases[0] >= 1000 && cases[1] >= 1000,
          std::to_string(cases[0]) + " unitary + " + std::to_string(cases[1]) +
              " antiunitary over dims 2..16; failures " + std::to_string(failures) +
              "; worst phase-equivalence deviation " + sci(worst) + " (tol 1e-8)"};
}

Outcome gauge_robustness() {
  Rng rng(400);
  int cases = 0;
  int failures = 0;
  double worst = 0.0;
  for (int n = 0; n < 300; ++n) {
    const Index dim = 2 + n % 11;
    const SymmetryOp s = wk::random_symmetry(dim, static_cast<Grading>(n % 2), 400'000 + n);
    const wk::ProbeTable t = wk::make_probe_table(s);
    auto jiggle = [&](const Ray& r) {
      return StateVector(log_uniform(rng, 1e-4, 1e4) * random_phase(rng) * r.rep());
    };
    // In memory: rays rebuilt from rescaled representatives.
    wk::ProbeTable u = t;
    u.base = Ray(jiggle(t.base));
    for (auto& r : u.a) r = Ray(jiggle(r));
    for (auto& r : u.b) r = Ray(jiggle(r));
    for (auto& r : *u.v) r = Ray(jiggle(r));
    const SymmetryOp reference = wk::wigner_lift(t).lift;
    auto compare = [&](const wk::ProbeTable& table) {
      ++cases;
      try {
        const auto eq = wk::equal_up_to_phase(reference, wk::wigner_lift(table).lift, 1e-8);
        worst = std::max(worst, eq.deviation);
        if (!eq.equal) ++failures;
      } catch (const wk::Error&) {
        ++failures;
      }
    };
    compare(u);
#ifdef WIGNERKIT_HAVE_CLI
    // Through the JSON reader, with raw (non-canonical) vectors on disk.
    namespace cli = wk::cli;
    cli::Json j = cli::to_json(t);
    j["base"] = cli::to_json(jiggle(t.base));
    for (std::size_t k = 0; k < t.a.size(); ++k) {
      j["A"][k] = cli::to_json(jiggle(t.a[k]));
      j["B"][k] = cli::to_json(jiggle(t.b[k]));
      j["V"][k] = cli::to_json(jiggle((*t.v)[k]));
    }
    compare(cli::probe_table_from_json(cli::Json::parse(cli::dump(j))));
#endif
  }
  return {failures == 0, std::to_string(cases) + " rescaled/rephased tables (scales 1e-4..1e4); failures " +
                             std::to_string(failures) + "; worst deviation " + sci(worst) + " (tol 1e-8)"};
}

Outcome cube_dichotomy() {
  const StateVector e1 = wk::testing::basis_vector(2, 0);
  const StateVector e2 = wk::testing::basis_vector(2, 1);
  Rng rng(500);
  int rotations = 0;
  int improper = 0;
  int mismatches = 0;
  double induced_dev = 0.0;
  for (const Eigen::Matrix3d& r : wk::testing::cube_symmetries()) {
    const bool proper = r.determinant() > 0.0;
    (proper ? rotations : improper)++;
    try {
      const wk::LiftReport report = wk::wigner_lift(wk::testing::bloch_map_table(r));
      if (report.grading() != (proper ? Grading::unitary : Grading::antiunitary)) ++mismatches;
      // The lift must induce the sphere map everywhere, not only on the probes.
      for (int n = 0; n < 50; ++n) {
        const Ray ray = wk::random_ray(2, rng);
        const auto c = wk::bloch_point(e1, e2, ray).cartesian();
        const Eigen::Vector3d expected = r * Eigen::Vector3d(c[0], c[1], c[2]);
        const auto got = wk::bloch_point(e1, e2, wk::apply_ray(report.lift, ray)).cartesian();
        induced_dev = std::max(induced_dev, (Eigen::Vector3d(got[0], got[1], got[2]) - expected).norm());
      }
    } catch (const wk::Error&) {
      ++mismatches;
    }
  }
  return {mismatches == 0 && rotations == 24 && improper == 24 && induced_dev <= 1e-10,
          std::to_string(rotations) + " rotations -> unitary, " + std::to_string(improper) +
              " improper -> antiunitary; mismatches " + std::to_string(mismatches) +
              "; induced sphere-map dev " + sci(induced_dev)};
}

Outcome curvature_identities() {
  Rng rng(600);
  double xi_dev = 0.0;
  double eta_dev = 0.0;
  double oracle_dev = 0.0;
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  for (int n = 0; n < 1000; ++n) {
    const Index dim = 3 + n % 6;
    const Ray base = wk::random_ray(dim, rng);
    const double s = scale(rng);
    const TangentVector xi = wk::testing::with_norm(wk::testing::random_tangent(base, rng), s);
    const TangentVector ixi = xi.rotated();
    TangentVector eta = wk::testing::random_tangent(base, rng);
    eta = eta - Complex(1.0 / (s * s), 0.0) * wk::fs_metric(xi, eta) * xi;
    eta = wk::testing::with_norm(eta, 1.0);
    xi_dev = std::max(xi_dev, (wk::curvature(base, xi, ixi, xi) + Complex(s * s, 0.0) * ixi).w().norm());
    eta_dev = std::max(eta_dev,
                       (wk::curvature(base, xi, ixi, eta) + Complex(0.5 * s * s, 0.0) * eta.rotated()).w().norm());

    const TangentVector x = wk::testing::with_norm(wk::testing::random_tangent(base, rng), 1.0);
    const TangentVector y = wk::testing::with_norm(wk::testing::random_tangent(base, rng), 1.0);
    const TangentVector z = wk::testing::with_norm(wk::testing::random_tangent(base, rng), 1.0);
    oracle_dev = std::max(oracle_dev,
                          (wk::curvature(base, x, y, z) - wk::curvature_fd_oracle(base, x, y, z, 1e-3)).w().norm());
  }
  return {xi_dev <= 1e-12 && eta_dev <= 1e-12 && oracle_dev <= 1e-4,
          "1000 frames, dims 3..8: xi identity " + sci(xi_dev) + ", eta identity " + sci(eta_dev) +
              " (tol 1e-12); oracle vs closed form at h=1e-3 " + sci(oracle_dev) + " (tol 1e-4)"};
}

Outcome scalar_kernel() {
  Rng rng(700);
  int scalars = 0;
  int wrong = 0;
  int passers = 0;
  double passer_dev = 0.0;
  int perturbed = 0;
  for (int n = 0; n < 1000; ++n) {
    const Index dim = 2 + n % 7;
    const Complex lambda = random_phase(rng);
    const int kind = n % 10;
    Matrix u;
    Grading g = Grading::unitary;
    bool scalar = false;
    if (kind < 3) {  // λI
      u = lambda * Matrix::Identity(dim, dim);
      scalar = true;
    } else if (kind < 7) {  // λ·Q diag(e^{iεθ}) Q†, ε ∈ [1e-6, 1e-1]
      const double eps = log_uniform(rng, 1e-6, 1e-1);
      const Matrix q = wk::haar_unitary(dim, rng);
      StateVector phases(dim);
      std::uniform_real_distribution<double> theta(-1.0, 1.0);
      for (Index k = 0; k < dim; ++k) phases[k] = std::polar(1.0, eps * theta(rng));
      phases[0] = std::polar(1.0, -eps);
      phases[1] = std::polar(1.0, eps);  // guarantee a relative phase of at least 2ε
      u = lambda * q * phases.asDiagonal() * q.adjoint();
      ++perturbed;
    } else if (kind < 8) {  // λK
      u = lambda * Matrix::Identity(dim, dim);
      g = Grading::antiunitary;
    } else {
      u = wk::haar_unitary(dim, rng);
      g = kind == 8 ? Grading::unitary : Grading::antiunitary;
    }
    scalars += scalar;
    const SymmetryOp s(u, g);
    const bool pass = wk::scalar_kernel_check(s, 64, 7000 + n);
    if (pass != scalar) ++wrong;
    if (pass) {
      ++passers;
      const Matrix m = s.matrix();
      passer_dev = std::max(passer_dev, (m - m(0, 0) * Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff());
      if (s.is_antiunitary()) ++wrong;
    }
  }
  return {wrong == 0 && passer_dev <= 1e-8,
          "1000 candidates (" + std::to_string(scalars) + " scalar, " + std::to_string(perturbed) +
              " perturbed, rest K-scalars and random); misclassified " + std::to_string(wrong) + "; " +
              std::to_string(passers) + " passers, max |U - u00 I| " + sci(passer_dev)};
}

Outcome time_reversal_fixture() {
  Matrix t(2, 2);
  t << 0.0, 1.0, -1.0, 0.0;
  const SymmetryOp tr(t, Grading::antiunitary);
  std::vector<wk::ProbeTable> tables;
  SymmetryOp power = SymmetryOp::identity(2);
  for (int k = 0; k < 4; ++k) {
    tables.push_back(wk::make_probe_table(power));
    power = wk::compose(power, tr);
  }
  const wk::GroupTable z4 = wk::GroupTable::cyclic(4);
  const wk::LiftFamily lifts = wk::lift_family(tables);
  const wk::GradedCocycle c = wk::cocycle_table(lifts, z4);
  std::vector<int> kernel;
  for (int g = 0; g < 4; ++g) {
    if (c.grading[static_cast<std::size_t>(g)] == 0) kernel.push_back(g);
  }
  const double twisted = wk::twisted_cocycle_check(c, z4);
  const Matrix& u = lifts[1].matrix();
  const double square_dev = (u * u.conjugate() + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();
  const double square3_dev = (lifts[3].matrix() * lifts[3].matrix().conjugate() + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();

  // The certificate and the grading survive any rephasing of the section.
  Rng rng(800);
  double rephased_twisted = 0.0;
  bool stable = true;
  for (int n = 0; n < 50; ++n) {
    std::vector<Complex> phases;
    for (int g = 0; g < 4; ++g) phases.push_back(random_phase(rng));
    const wk::LiftFamily moved = wk::rephase_section(lifts, phases);
    const wk::GradedCocycle mc = wk::cocycle_table(moved, z4);
    rephased_twisted = std::max(rephased_twisted, wk::twisted_cocycle_check(mc, z4));
    const auto sq = wk::antiunitary_square(moved[1]);
    stable = stable && mc.grading == c.grading && sq && std::abs(*sq + 1.0) <= 1e-12;
  }
  const bool ok = kernel == std::vector<int>{0, 2} && twisted <= 1e-8 && square_dev <= 1e-12 &&
                  square3_dev <= 1e-12 && rephased_twisted <= 1e-8 && stable;
  return {ok, "grading [" + std::to_string(c.grading[0]) + "," + std::to_string(c.grading[1]) + "," +
                  std::to_string(c.grading[2]) + "," + std::to_string(c.grading[3]) + "], kernel {0,2}: " +
                  (kernel == std::vector<int>{0, 2} ? "yes" : "no") + "; twisted residual " + sci(twisted) +
                  " (rephased " + sci(rephased_twisted) + ", tol 1e-8); |U conj(U) + I| " + sci(square_dev) +
                  " (tol 1e-12)"};
}

Outcome rejection_stage() {
  Rng rng(900);
  int correct = 0;
  std::string first_bad;
  for (int n = 0; n < 100; ++n) {
    const Index dim = 2 + n % 9;
    const SymmetryOp s = wk::random_symmetry(dim, static_cast<Grading>(n % 2), 900'000 + n);
    wk::ProbeTable t = wk::make_probe_table(s);
    const double delta = log_uniform(rng, 10.0 * t.tolerance, 0.4);
    const std::size_t k = static_cast<std::size_t>(n) % static_cast<std::size_t>(dim - 1);

    // Unit vector orthogonal to the image of the base point.
    const StateVector l = t.base.rep();
    StateVector perp = wk::gaussian_vector(dim, rng);
    perp -= wk::inner(l, perp) * l;
    perp.normalize();
    const int family = n % 3;
    // Target transition probability with the base image: 1/2 ± δ for A, B; δ for V.
    const double target = family == 2 ? delta : 0.5 + (n % 2 ? delta : -delta);
    const Ray bad(std::sqrt(target) * l + std::sqrt(1.0 - target) * perp);
    (family == 0 ? t.a : family == 1 ? t.b : *t.v)[k] = bad;

    try {
      wk::wigner_lift(t);
      if (first_bad.empty()) first_bad = "case " + std::to_string(n) + " accepted";
    } catch (const wk::Error& e) {
      if (e.code() == wk::ErrorCode::NotASymmetry && e.stage() == wk::stage::kProbeConsistency) {
        ++correct;
      } else if (first_bad.empty()) {
        first_bad = "case " + std::to_string(n) + ": " + e.what();
      }
    }
  }
  return {correct == 100, std::to_string(correct) + "/100 labelled probe-consistency (deviations 10*tol..0.4)" +
                              (first_bad.empty() ? "" : "; first miss: " + first_bad)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"distance-probability-identity", distance_probability_identity},
      {"stereographic-cross-check", stereographic_cross_check},
      {"wigner-round-trip", wigner_round_trip},
      {"gauge-robustness", gauge_robustness},
      {"cube-dichotomy", cube_dichotomy},
      {"curvature-identities", curvature_identities},
      {"scalar-kernel", scalar_kernel},
      {"time-reversal-extension", time_reversal_fixture},
      {"rejection-stage", rejection_stage},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", outcome.passed ? "PASS" : "FAIL", name, outcome.detail.c_str(), secs);
    failed += !outcome.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
