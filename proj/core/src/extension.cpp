// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/extension.hpp"

#include "wignerkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>

namespace wignerkit {

namespace {

[[noreturn]] void invalid_group(const std::string& msg) {
  throw Error(ErrorCode::InvalidGroup, msg);
}

Complex twist(int grading, Complex z) { return grading ? std::conj(z) : z; }

}  // namespace

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(std::vector<std::vector<int>> mult) : mult_(std::move(mult)) {
  const auto m = static_cast<int>(mult_.size());
  if (m < 1) invalid_group("group table is empty");
  for (int g = 0; g < m; ++g) {
    const auto& row = mult_[static_cast<std::size_t>(g)];
    if (static_cast<int>(row.size()) != m) invalid_group("row " + std::to_string(g) + " has wrong length");
    for (int x : row) {
      if (x < 0 || x >= m) invalid_group("row " + std::to_string(g) + " has label out of range");
    }
  }
  for (int g = 0; g < m; ++g) {
    if (this->mult(0, g) != g || this->mult(g, 0) != g) invalid_group("label 0 is not the identity");
  }
  for (int g = 0; g < m; ++g) {
    std::vector<char> row_seen(static_cast<std::size_t>(m), 0);
    std::vector<char> col_seen(static_cast<std::size_t>(m), 0);
    for (int h = 0; h < m; ++h) {
      row_seen[static_cast<std::size_t>(this->mult(g, h))] = 1;
      col_seen[static_cast<std::size_t>(this->mult(h, g))] = 1;
    }
    if (std::count(row_seen.begin(), row_seen.end(), 1) != m ||
        std::count(col_seen.begin(), col_seen.end(), 1) != m) {
      invalid_group("row or column " + std::to_string(g) + " is not a permutation");
    }
  }
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      for (int k = 0; k < m; ++k) {
        if (this->mult(this->mult(g, h), k) != this->mult(g, this->mult(h, k))) {
          invalid_group("multiplication is not associative at (" + std::to_string(g) + ", " +
                        std::to_string(h) + ", " + std::to_string(k) + ")");
        }
      }
    }
  }
}

int GroupTable::inverse(int g) const {
  for (int h = 0; h < order(); ++h) {
    if (mult(g, h) == 0) return h;
  }
  invalid_group("element without inverse");
}

GroupTable GroupTable::cyclic(int m) {
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = (g + h) % m;
  }
  return GroupTable(std::move(mult));
}

// ---------------------------------------------------------------------------
// Lifts, grading, cocycle

LiftFamily lift_family(std::span<const ProbeTable> tables) {
  if (tables.empty()) throw Error(ErrorCode::InvalidArgument, "lift_family: no tables");
  const Index dim = tables.front().dim;
  LiftFamily lifts;
  lifts.reserve(tables.size());
  for (std::size_t g = 0; g < tables.size(); ++g) {
    if (tables[g].dim != dim) {
      throw Error(ErrorCode::DimMismatch, "lift_family: element " + std::to_string(g) + " has dim " +
                                              std::to_string(tables[g].dim));
    }
    try {
      lifts.push_back(wigner_lift(tables[g]).lift);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotASymmetry) throw;
      throw Error(ErrorCode::NotASymmetry, "element " + std::to_string(g) + ": " + e.what(), e.stage());
    }
  }
  const SymmetryOp id = SymmetryOp::identity(dim);
  if (!equal_up_to_phase(id, lifts.front(), tables.front().tolerance).equal) {
    throw Error(ErrorCode::NotASymmetry, "element 0: table does not describe the identity",
                std::string(stage::kVerify));
  }
  lifts.front() = id;
  return lifts;
}

GradingResult grading_homomorphism(const LiftFamily& lifts, const GroupTable& group) {
  if (static_cast<int>(lifts.size()) != group.order()) {
    throw Error(ErrorCode::InvalidArgument, "grading_homomorphism: one lift per element required");
  }
  GradingResult out;
  for (const SymmetryOp& s : lifts) out.grading.push_back(grading_bit(s.grading()));
  const auto& gr = out.grading;
  for (int g = 0; g < group.order(); ++g) {
    for (int h = 0; h < group.order(); ++h) {
      if (gr[static_cast<std::size_t>(group.mult(g, h))] !=
          (gr[static_cast<std::size_t>(g)] ^ gr[static_cast<std::size_t>(h)])) {
        ++out.violations;
      }
    }
  }
  if (out.violations > 0) {
    throw Error(ErrorCode::NotAHomomorphism,
                std::to_string(out.violations) + " pairs violate grading(gh) = grading(g) + grading(h)");
  }
  return out;
}

GradedCocycle cocycle_table(const LiftFamily& lifts, const GroupTable& group, double tol) {
  GradedCocycle out{grading_homomorphism(lifts, group).grading, Matrix(group.order(), group.order())};
  for (int g = 0; g < group.order(); ++g) {
    for (int h = 0; h < group.order(); ++h) {
      const auto& lg = lifts[static_cast<std::size_t>(g)];
      const auto& lh = lifts[static_cast<std::size_t>(h)];
      const auto& lgh = lifts[static_cast<std::size_t>(group.mult(g, h))];
      const PhaseEquivalence eq = equal_up_to_phase(lgh, compose(lg, lh), tol);
      if (!eq.equal) {
        throw Error(ErrorCode::NotProjective, "L(" + std::to_string(g) + ")∘L(" + std::to_string(h) +
                                                  ") is not a scalar multiple of L(gh)");
      }
      out.mu(g, h) = eq.phase;
    }
  }
  return out;
}

double twisted_cocycle_check(const GradedCocycle& c, const GroupTable& group) {
  double worst = 0.0;
  const int m = group.order();
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      for (int k = 0; k < m; ++k) {
        const int gh = group.mult(g, h);
        const int hk = group.mult(h, k);
        const Complex lhs = c.mu(g, h) * c.mu(gh, k);
        const Complex rhs = twist(c.grading[static_cast<std::size_t>(g)], c.mu(h, k)) * c.mu(g, hk);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  return worst;
}

LiftFamily rephase_section(const LiftFamily& lifts, std::span<const Complex> phases) {
  if (phases.size() != lifts.size()) {
    throw Error(ErrorCode::InvalidArgument, "rephase_section: one phase per element required");
  }
  LiftFamily out;
  out.reserve(lifts.size());
  out.push_back(lifts.front());
  for (std::size_t g = 1; g < lifts.size(); ++g) out.push_back(scaled(phases[g], lifts[g]));
  return out;
}

std::optional<Complex> antiunitary_square(const SymmetryOp& s, double tol) {
  if (!s.is_antiunitary()) return std::nullopt;
  const Matrix square = s.matrix() * s.matrix().conjugate();
  const Complex c = square(0, 0);
  const double off = (square - c * Matrix::Identity(s.dim(), s.dim())).cwiseAbs().maxCoeff();
  if (off > tol) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------
// Coboundary search

namespace {

class CochainProblem {
 public:
  CochainProblem(const GradedCocycle& c, const GroupTable& group, std::span<const int> generators)
      : c_(c), group_(group), generators_(generators.begin(), generators.end()) {}

  /// β determined by its values on generators, propagated along the right
  /// Cayley graph by β(gs) = β(g)·τ_g(β(s))·mu(g,s). Empty if the generators
  /// do not reach every element.
  std::vector<Complex> propagate(std::span<const double> angles) const {
    const auto m = static_cast<std::size_t>(group_.order());
    std::vector<Complex> beta(m);
    std::vector<char> known(m, 0);
    beta[0] = 1.0;
    known[0] = 1;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      const auto s = static_cast<std::size_t>(generators_[j]);
      if (s == 0 || known[s]) continue;
      beta[s] = std::polar(1.0, angles[j]);
      known[s] = 1;
    }
    std::deque<int> queue{0};
    std::vector<char> visited(m, 0);
    visited[0] = 1;
    while (!queue.empty()) {
      const int g = queue.front();
      queue.pop_front();
      for (int s : generators_) {
        const int gs = group_.mult(g, s);
        const auto ugs = static_cast<std::size_t>(gs);
        if (!known[ugs]) {
          beta[ugs] = beta[static_cast<std::size_t>(g)] *
                      twist(c_.grading[static_cast<std::size_t>(g)], beta[static_cast<std::size_t>(s)]) *
                      c_.mu(g, s);
          known[ugs] = 1;
        }
        if (!visited[ugs]) {
          visited[ugs] = 1;
          queue.push_back(gs);
        }
      }
    }
    if (std::count(visited.begin(), visited.end(), 1) != static_cast<long>(m)) return {};
    return beta;
  }

  double residual(const std::vector<Complex>& beta) const {
    double worst = 0.0;
    for (int g = 0; g < group_.order(); ++g) {
      for (int h = 0; h < group_.order(); ++h) {
        const Complex lhs = beta[static_cast<std::size_t>(g)] *
                            twist(c_.grading[static_cast<std::size_t>(g)], beta[static_cast<std::size_t>(h)]) *
                            c_.mu(g, h);
        worst = std::max(worst, std::abs(lhs - beta[static_cast<std::size_t>(group_.mult(g, h))]));
      }
    }
    return worst;
  }

  double evaluate(std::span<const double> angles) const { return residual(propagate(angles)); }

  std::size_t arity() const { return generators_.size(); }

 private:
  const GradedCocycle& c_;
  const GroupTable& group_;
  std::vector<int> generators_;
};

struct Candidate {
  double value;
  std::vector<double> angles;
};

}  // namespace

std::optional<CoboundarySearch> search_trivializing_cochain(const GradedCocycle& cocycle,
                                                            const GroupTable& group,
                                                            std::span<const int> generators,
                                                            int grid_points) {
  if (group.order() > 8 || generators.empty() || generators.size() > 3) return std::nullopt;
  for (int s : generators) {
    if (s < 0 || s >= group.order()) return std::nullopt;
  }
  const CochainProblem problem(cocycle, group, generators);
  const std::size_t k = problem.arity();
  if (problem.propagate(std::vector<double>(k, 0.0)).empty()) return std::nullopt;

  const int per_axis = std::max(2, static_cast<int>(std::floor(std::pow(grid_points, 1.0 / static_cast<double>(k)) + 1e-9)));
  const double step = 2.0 * std::numbers::pi / per_axis;

  // Coarse grid, keeping the best few candidates.
  constexpr std::size_t kKeep = 8;
  std::vector<Candidate> best;
  std::vector<int> idx(k, 0);
  for (;;) {
    std::vector<double> angles(k);
    for (std::size_t j = 0; j < k; ++j) angles[j] = step * idx[j];
    best.push_back({problem.evaluate(angles), angles});
    std::sort(best.begin(), best.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    if (best.size() > kKeep) best.pop_back();

    std::size_t j = 0;
    while (j < k && ++idx[j] == per_axis) idx[j++] = 0;
    if (j == k) break;
  }

  // Local zoom around each candidate: a 5^k stencil, halving the window.
  Candidate winner = best.front();
  for (Candidate cand : best) {
    double window = step;
    for (int round = 0; round < 60; ++round) {
      Candidate round_best = cand;
      std::vector<int> offs(k, -2);
      for (;;) {
        std::vector<double> angles = cand.angles;
        for (std::size_t j = 0; j < k; ++j) angles[j] += 0.5 * window * offs[j];
        const double v = problem.evaluate(angles);
        if (v < round_best.value) round_best = {v, angles};
        std::size_t j = 0;
        while (j < k && ++offs[j] == 3) offs[j++] = -2;
        if (j == k) break;
      }
      cand = round_best;
      window *= 0.5;
    }
    if (cand.value < winner.value) winner = cand;
  }

  CoboundarySearch out;
  out.cochain = problem.propagate(winner.angles);
  out.min_residual = winner.value;
  out.trivializable = winner.value <= 1e-6;
  return out;
}

}  // namespace wignerkit
