// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file commands.hpp
 * @brief The `wignerkit` subcommands as callable functions.
 *
 * Exit codes: 0 success, 1 input error, 2 mathematical rejection,
 * 3 tolerance failure. Reports go to `out`, diagnostics to `err`.
 */

#pragma once

#include "wignerkit/state_space.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace wignerkit::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kRejected = 2, kToleranceFailure = 3 };

inline constexpr const char* kToleranceEnv = "WIGNERKIT_TOL";

/// `explicit_tol` if given, else $WIGNERKIT_TOL if set, else `fallback`.
/// Throws InputError for a non-positive or unparsable value.
double resolve_tolerance(std::optional<double> explicit_tol, double fallback);

struct LiftConfig {
  std::filesystem::path in;
  std::filesystem::path out;
  std::optional<double> tol;
};
int run_lift(const LiftConfig& config, std::ostream& out, std::ostream& err);

struct VerifyConfig {
  std::filesystem::path op;
  std::filesystem::path table;
  int samples = 100;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};
int run_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);

/// v1, v2: inline JSON vectors or paths to files holding one.
struct DistanceConfig {
  std::string v1;
  std::string v2;
};
int run_distance(const DistanceConfig& config, std::ostream& out, std::ostream& err);

/// frame: {"e1": vector, "e2": vector}; ray: a vector. Inline JSON or paths.
struct BlochConfig {
  std::string frame;
  std::string ray;
};
int run_bloch(const BlochConfig& config, std::ostream& out, std::ostream& err);

struct ProbeTableConfig {
  std::filesystem::path op;
  std::filesystem::path out;
};
int run_probe_table(const ProbeTableConfig& config, std::ostream& out, std::ostream& err);

struct Theorem1Config {
  Index dim = 4;
  int samples = 10000;
  std::uint64_t seed = 0;
  std::optional<double> tol;  ///< default 1e-12
};
int run_check_theorem1(const Theorem1Config& config, std::ostream& out, std::ostream& err);

using CurvatureTensor = std::function<TangentVector(const Ray&, const TangentVector&, const TangentVector&,
                                                    const TangentVector&)>;

struct CurvatureConfig {
  Index dim = 4;
  double step = 1e-3;
  int samples = 100;
  std::uint64_t seed = 0;
  double identity_tol = 1e-12;
  double oracle_tol = 1e-4;
  /// Tensor under test; replaced in mutation tests.
  CurvatureTensor tensor = [](const Ray& b, const TangentVector& x, const TangentVector& y,
                              const TangentVector& z) { return curvature(b, x, y, z); };
};
int run_check_curvature(const CurvatureConfig& config, std::ostream& out, std::ostream& err);

struct ExtensionConfig {
  std::filesystem::path group;
  std::filesystem::path out;
  std::optional<double> tol;
};
int run_extension(const ExtensionConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wignerkit::cli
