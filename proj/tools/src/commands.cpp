// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/cli/commands.hpp"

#include "wignerkit/cli/json_io.hpp"
#include "wignerkit/error.hpp"
#include "wignerkit/extension.hpp"
#include "wignerkit/sampling.hpp"
#include "wignerkit/wigner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <set>

namespace wignerkit::cli {

namespace {

bool is_rejection(ErrorCode code) {
  return code == ErrorCode::NotASymmetry || code == ErrorCode::NotAHomomorphism ||
         code == ErrorCode::NotProjective;
}

/// Runs `body`, mapping exceptions to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    if (is_rejection(e.code())) {
      err << "rejected";
      if (!e.stage().empty()) err << " at stage " << e.stage();
      err << ": " << e.what() << "\n";
      return kRejected;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

std::optional<double> tolerance_override(std::optional<double> explicit_tol) {
  if (explicit_tol) {
    if (!(*explicit_tol > 0.0) || !std::isfinite(*explicit_tol)) throw InputError("--tol", "must be positive");
    return explicit_tol;
  }
  const char* env = std::getenv(kToleranceEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
    throw InputError(kToleranceEnv, std::string("expected a positive number, got \"") + env + "\"");
  }
  return value;
}

void require_positive(long long value, const char* field) {
  if (value < 1) throw InputError(field, "must be at least 1");
}

TangentVector unit_tangent(const Ray& base, Rng& rng) {
  TangentVector t = TangentVector::project(base, gaussian_vector(base.dim(), rng));
  return Complex(1.0 / t.norm(), 0.0) * t;
}

double gap(const TangentVector& a, const TangentVector& b) { return (a.w() - b.w()).norm(); }

/// Smallest-label greedy generating set.
std::vector<int> greedy_generators(const GroupTable& group) {
  std::vector<int> gens;
  std::set<int> reached{0};
  for (int g = 1; g < group.order(); ++g) {
    if (reached.count(g)) continue;
    gens.push_back(g);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a : std::vector<int>(reached.begin(), reached.end())) {
        for (int s : gens) {
          if (reached.insert(group.mult(a, s)).second) grew = true;
        }
      }
    }
  }
  return gens;
}

}  // namespace

double resolve_tolerance(std::optional<double> explicit_tol, double fallback) {
  return tolerance_override(explicit_tol).value_or(fallback);
}

// ---------------------------------------------------------------------------

int run_lift(const LiftConfig& config, std::ostream&, std::ostream& err) {
  return guarded(err, [&] {
    ProbeTable table = probe_table_from_json(read_json_file(config.in, "--in"));
    if (const auto tol = tolerance_override(config.tol)) table.tolerance = *tol;

    if (table.dim == 1) {
      // Every map of a one-point space lifts to any unit scalar.
      const LiftReport report{SymmetryOp::identity(1), {}, table.tolerance};
      Json j = to_json(report);
      j["warning"] = "dim 1: the lift is not unique (grading and phase are arbitrary); identity returned";
      err << "warning: " << j["warning"].get<std::string>() << "\n";
      write_json_file(config.out, j);
      return int{kSuccess};
    }

    const LiftReport report = wigner_lift(table);
    write_json_file(config.out, to_json(report));
    return report.accepted() ? int{kSuccess} : int{kToleranceFailure};
  });
}

int run_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_positive(config.samples, "--samples");
    const SymmetryOp op = symmetry_from_json(read_json_file(config.op, "--op"), "op");
    const ProbeTable table = probe_table_from_json(read_json_file(config.table, "--table"), "table");
    if (op.matrix().rows() != table.dim) throw InputError("--table", "dimension differs from --op");
    const double tol = resolve_tolerance(config.tol, table.tolerance);
    const VerifyReport r = verify_lift(op, table, config.samples, config.seed);
    const bool passed = r.probe_max <= tol && r.pair_deviation <= tol;
    out << dump(Json{{"command", "verify"},
                     {"probe_max", r.probe_max},
                     {"pair_deviation", r.pair_deviation},
                     {"probes", r.probes},
                     {"pairs", r.pairs},
                     {"seed", config.seed},
                     {"tolerance", tol},
                     {"passed", passed}});
    return passed ? int{kSuccess} : int{kToleranceFailure};
  });
}

int run_distance(const DistanceConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Ray r1 = ray_from_json(read_json_argument(config.v1, "--v1"), "--v1");
    const Ray r2 = ray_from_json(read_json_argument(config.v2, "--v2"), "--v2");
    if (r1.dim() != r2.dim()) throw InputError("--v2", "length differs from --v1");
    out << dump(Json{{"transition_probability", transition_probability(r1, r2)},
                     {"fs_distance", fs_distance(r1, r2)}});
    return int{kSuccess};
  });
}

int run_bloch(const BlochConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json frame = read_json_argument(config.frame, "--frame");
    if (!frame.is_object() || !frame.contains("e1") || !frame.contains("e2")) {
      throw InputError("--frame", "expected {\"e1\": vector, \"e2\": vector}");
    }
    const StateVector e1 = vector_from_json(frame["e1"], "--frame.e1");
    const StateVector e2 = vector_from_json(frame["e2"], "--frame.e2");
    const Ray ray = ray_from_json(read_json_argument(config.ray, "--ray"), "--ray");
    if (e1.size() != e2.size() || e1.size() != ray.dim()) throw InputError("--ray", "lengths differ");
    out << dump(to_json(bloch_point(e1, e2, ray)));
    return int{kSuccess};
  });
}

int run_probe_table(const ProbeTableConfig& config, std::ostream&, std::ostream& err) {
  return guarded(err, [&] {
    const SymmetryOp op = symmetry_from_json(read_json_file(config.op, "--op"));
    if (op.matrix().rows() < 2) throw InputError("dim", "probe tables need dim ≥ 2");
    write_json_file(config.out, to_json(make_probe_table(op)));
    return int{kSuccess};
  });
}

int run_check_theorem1(const Theorem1Config& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.dim < 2) throw InputError("--dim", "must be at least 2");
    require_positive(config.samples, "--samples");
    const double tol = resolve_tolerance(config.tol, 1e-12);

    auto deviation = [](const Ray& a, const Ray& b) {
      return std::abs(std::cos(fs_distance(a, b)) - (2.0 * transition_probability(a, b) - 1.0));
    };
    Rng rng(config.seed);
    double worst = 0.0;
    for (int n = 0; n < config.samples; ++n) {
      const Ray a = random_ray(config.dim, rng);
      const Ray b = random_ray(config.dim, rng);
      worst = std::max(worst, deviation(a, b));
    }
    const Ray e1 = Ray::basis(config.dim, 0);
    const Ray e2 = Ray::basis(config.dim, 1);
    const double orth = deviation(e1, e2);
    worst = std::max(worst, orth);

    const bool passed = worst <= tol;
    out << dump(Json{{"command", "check-theorem1"},
                     {"dim", config.dim},
                     {"samples", config.samples},
                     {"seed", config.seed},
                     {"tolerance", tol},
                     {"max_deviation", worst},
                     {"orthogonal_pair",
                      Json{{"transition_probability", transition_probability(e1, e2)},
                           {"fs_distance", fs_distance(e1, e2)},
                           {"deviation", orth}}},
                     {"passed", passed}});
    if (!passed) err << "check-theorem1: max deviation " << worst << " exceeds " << tol << "\n";
    return passed ? int{kSuccess} : int{kToleranceFailure};
  });
}

int run_check_curvature(const CurvatureConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.dim < 2) throw InputError("--dim", "must be at least 2");
    require_positive(config.samples, "--samples");
    if (!(config.step >= 1e-4 && config.step <= 1e-2)) throw InputError("--step", "must lie in [1e-4, 1e-2]");
    const bool eta_possible = config.dim >= 3;
    if (!eta_possible) {
      err << "notice: dim 2 has no tangent vector complex-orthogonal to ξ; R(ξ,Iξ)η identity skipped\n";
    }

    Rng rng(config.seed);
    double xi_dev = 0.0;
    double eta_dev = 0.0;
    double oracle_dev = 0.0;
    for (int n = 0; n < config.samples; ++n) {
      const Ray base = random_ray(config.dim, rng);
      const TangentVector xi = unit_tangent(base, rng);
      const TangentVector ixi = xi.rotated();
      xi_dev = std::max(xi_dev, gap(config.tensor(base, xi, ixi, xi), Complex(-1.0, 0.0) * ixi));
      if (eta_possible) {
        TangentVector eta = unit_tangent(base, rng);
        eta = eta - fs_metric(xi, eta) * xi;
        eta = Complex(1.0 / eta.norm(), 0.0) * eta;
        eta_dev = std::max(eta_dev, gap(config.tensor(base, xi, ixi, eta), Complex(-0.5, 0.0) * eta.rotated()));
      }
      const TangentVector x = unit_tangent(base, rng);
      const TangentVector y = unit_tangent(base, rng);
      const TangentVector z = unit_tangent(base, rng);
      oracle_dev = std::max(oracle_dev, gap(config.tensor(base, x, y, z),
                                            curvature_fd_oracle(base, x, y, z, config.step)));
    }

    const bool passed = xi_dev <= config.identity_tol && eta_dev <= config.identity_tol &&
                        oracle_dev <= config.oracle_tol;
    out << dump(Json{{"command", "check-curvature"},
                     {"dim", config.dim},
                     {"step", config.step},
                     {"samples", config.samples},
                     {"seed", config.seed},
                     {"xi_identity", xi_dev},
                     {"eta_identity", eta_possible ? Json(eta_dev) : Json(nullptr)},
                     {"oracle", oracle_dev},
                     {"identity_tolerance", config.identity_tol},
                     {"oracle_tolerance", config.oracle_tol},
                     {"passed", passed}});
    if (!passed) err << "check-curvature: tolerance exceeded\n";
    return passed ? int{kSuccess} : int{kToleranceFailure};
  });
}

int run_extension(const ExtensionConfig& config, std::ostream&, std::ostream& err) {
  return guarded(err, [&] {
    GroupInput input = group_from_json(read_json_file(config.group, "--group"));
    const auto tol_override = tolerance_override(config.tol);
    if (tol_override) {
      for (ProbeTable& t : input.tables) t.tolerance = *tol_override;
    }
    const double tol = tol_override.value_or(input.tables.front().tolerance);

    const LiftFamily lifts = lift_family(input.tables);
    const GradedCocycle cocycle = cocycle_table(lifts, input.group, tol);

    ExtensionReport report;
    report.grading = cocycle.grading;
    report.mu = cocycle.mu;
    report.lifts = lifts;
    report.twisted_residual = twisted_cocycle_check(cocycle, input.group);
    for (int g = 0; g < input.group.order(); ++g) {
      if (cocycle.grading[static_cast<std::size_t>(g)] == 0) report.grading_kernel.push_back(g);
      report.antiunitary_squares.push_back(lifts[static_cast<std::size_t>(g)].is_antiunitary()
                                               ? antiunitary_square(lifts[static_cast<std::size_t>(g)], tol)
                                               : std::nullopt);
    }
    const std::vector<int> gens = input.generators.empty() ? greedy_generators(input.group) : input.generators;
    report.coboundary = search_trivializing_cochain(cocycle, input.group, gens);
    report.tolerance = tol;
    report.accepted = report.twisted_residual <= tol;
    write_json_file(config.out, to_json(report));
    if (!report.accepted) err << "extension: twisted cocycle residual " << report.twisted_residual << " exceeds " << tol << "\n";
    return report.accepted ? int{kSuccess} : int{kToleranceFailure};
  });
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"wignerkit: ray-space geometry and Wigner lifts"};
  app.require_subcommand(1);
  std::function<int()> action;
  double tol_value = 0.0;

  auto tol_option = [&](CLI::App* sub) {
    return sub->add_option("--tol", tol_value, "tolerance (default: $WIGNERKIT_TOL, then the input's own)");
  };
  auto tol_of = [&](CLI::Option* opt) { return opt->count() ? std::optional<double>(tol_value) : std::nullopt; };

  LiftConfig lift;
  auto* lift_cmd = app.add_subcommand("lift", "recover the operator behind a probe table");
  lift_cmd->add_option("--in", lift.in, "probe table JSON")->required();
  lift_cmd->add_option("--out", lift.out, "lift report JSON")->required();
  auto* lift_tol = tol_option(lift_cmd);
  lift_cmd->callback([&] {
    lift.tol = tol_of(lift_tol);
    action = [&] { return run_lift(lift, out, err); };
  });

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "check an operator against a probe table");
  verify_cmd->add_option("--op", verify.op, "symmetry operator JSON")->required();
  verify_cmd->add_option("--table", verify.table, "probe table JSON")->required();
  verify_cmd->add_option("--samples", verify.samples, "random ray pairs")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
  auto* verify_tol = tol_option(verify_cmd);
  verify_cmd->callback([&] {
    verify.tol = tol_of(verify_tol);
    action = [&] { return run_verify(verify, out, err); };
  });

  DistanceConfig distance;
  auto* distance_cmd = app.add_subcommand("distance", "transition probability and Fubini–Study distance");
  distance_cmd->add_option("--v1", distance.v1, "vector JSON or file")->required();
  distance_cmd->add_option("--v2", distance.v2, "vector JSON or file")->required();
  distance_cmd->callback([&] { action = [&] { return run_distance(distance, out, err); }; });

  BlochConfig bloch;
  auto* bloch_cmd = app.add_subcommand("bloch", "Bloch-sphere point of a ray in a 2-dim subspace");
  bloch_cmd->add_option("--frame", bloch.frame, "{\"e1\", \"e2\"} JSON or file")->required();
  bloch_cmd->add_option("--ray", bloch.ray, "vector JSON or file")->required();
  bloch_cmd->callback([&] { action = [&] { return run_bloch(bloch, out, err); }; });

  ProbeTableConfig probe;
  auto* probe_cmd = app.add_subcommand("probe-table", "tabulate an operator on the probe rays");
  probe_cmd->add_option("--op", probe.op, "symmetry operator JSON")->required();
  probe_cmd->add_option("--out", probe.out, "probe table JSON")->required();
  probe_cmd->callback([&] { action = [&] { return run_probe_table(probe, out, err); }; });

  Theorem1Config theorem1;
  auto* th1_cmd = app.add_subcommand("check-theorem1", "check cos d = 2p − 1 on random pairs");
  th1_cmd->add_option("--dim", theorem1.dim)->capture_default_str();
  th1_cmd->add_option("--samples", theorem1.samples)->capture_default_str();
  th1_cmd->add_option("--seed", theorem1.seed)->capture_default_str();
  auto* th1_tol = th1_cmd->add_option("--tol", tol_value, "tolerance (default: $WIGNERKIT_TOL, then 1e-12)");
  th1_cmd->callback([&] {
    theorem1.tol = tol_of(th1_tol);
    action = [&] { return run_check_theorem1(theorem1, out, err); };
  });

  CurvatureConfig curv;
  auto* curv_cmd = app.add_subcommand("check-curvature", "check curvature identities and the finite-difference oracle");
  curv_cmd->add_option("--dim", curv.dim)->capture_default_str();
  curv_cmd->add_option("--step", curv.step)->capture_default_str();
  curv_cmd->add_option("--samples", curv.samples)->capture_default_str();
  curv_cmd->add_option("--seed", curv.seed)->capture_default_str();
  curv_cmd->callback([&] { action = [&] { return run_check_curvature(curv, out, err); }; });

  ExtensionConfig ext;
  auto* ext_cmd = app.add_subcommand("extension", "grading and cocycle of a finite group of ray symmetries");
  ext_cmd->add_option("--group", ext.group, "group JSON")->required();
  ext_cmd->add_option("--out", ext.out, "extension report JSON")->required();
  auto* ext_tol = tol_option(ext_cmd);
  ext_cmd->callback([&] {
    ext.tol = tol_of(ext_tol);
    action = [&] { return run_extension(ext, out, err); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kSuccess} : int{kInputError};
  }
  return action ? action() : int{kInputError};
}

}  // namespace wignerkit::cli
