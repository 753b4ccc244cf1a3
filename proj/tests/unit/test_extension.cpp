// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/error.hpp"
#include "wignerkit/extension.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace wignerkit {
namespace {

const Complex I(0.0, 1.0);

SymmetryOp time_reversal() {
  Matrix u(2, 2);
  u << 0.0, 1.0, -1.0, 0.0;
  return SymmetryOp(u, Grading::antiunitary);
}

SymmetryOp power(const SymmetryOp& s, int k) {
  SymmetryOp out = SymmetryOp::identity(s.matrix().rows());
  for (int j = 0; j < k; ++j) out = compose(out, s);
  return out;
}

/// Tables of g ↦ s^g for the cyclic group of order m.
std::vector<ProbeTable> cyclic_tables(const SymmetryOp& s, int m) {
  std::vector<ProbeTable> tables;
  for (int k = 0; k < m; ++k) tables.push_back(make_probe_table(power(s, k)));
  return tables;
}

GradedCocycle cyclic_cocycle(const SymmetryOp& s, int m) {
  const GroupTable group = GroupTable::cyclic(m);
  return cocycle_table(lift_family(cyclic_tables(s, m)), group);
}

// ---------------------------------------------------------------------------
// GroupTable

TEST(GroupTable, CyclicIsValid) {
  const GroupTable z4 = GroupTable::cyclic(4);
  EXPECT_EQ(z4.order(), 4);
  EXPECT_EQ(z4.mult(3, 2), 1);
  EXPECT_EQ(z4.inverse(1), 3);
}

TEST(GroupTable, RejectsMalformedTables) {
  auto code = [](std::vector<std::vector<int>> t) {
    try {
      GroupTable g(std::move(t));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code({}), ErrorCode::InvalidGroup);
  EXPECT_EQ(code({{0, 1}, {1}}), ErrorCode::InvalidGroup);          // ragged
  EXPECT_EQ(code({{0, 2}, {1, 0}}), ErrorCode::InvalidGroup);       // out of range
  EXPECT_EQ(code({{1, 0}, {0, 1}}), ErrorCode::InvalidGroup);       // 0 not identity
  EXPECT_EQ(code({{0, 1}, {1, 1}}), ErrorCode::InvalidGroup);       // not Latin
  // A Latin square with identity 0 that is not associative (order 5 loop).
  EXPECT_EQ(code({{0, 1, 2, 3, 4},
                  {1, 0, 3, 4, 2},
                  {2, 4, 0, 1, 3},
                  {3, 2, 4, 0, 1},
                  {4, 3, 1, 2, 0}}),
            ErrorCode::InvalidGroup);
}

// ---------------------------------------------------------------------------
// lift_family / grading / cocycle

TEST(Extension, TrivialGroup) {
  const GroupTable group = GroupTable::cyclic(1);
  const std::vector<ProbeTable> tables{make_probe_table(SymmetryOp::identity(3))};
  const LiftFamily lifts = lift_family(tables);
  EXPECT_EQ(lifts[0].matrix(), Matrix::Identity(3, 3));
  const GradedCocycle c = cocycle_table(lifts, group);
  EXPECT_EQ(c.grading, std::vector<int>{0});
  EXPECT_LE(std::abs(c.mu(0, 0) - 1.0), 1e-15);
}

TEST(Extension, ComplexConjugationZ2) {
  const GradedCocycle c = cyclic_cocycle(SymmetryOp::conjugation(2), 2);
  EXPECT_EQ(c.grading, (std::vector<int>{0, 1}));
  EXPECT_LE((c.mu - Matrix::Ones(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(twisted_cocycle_check(c, GroupTable::cyclic(2)), 1e-12);
}

TEST(Extension, SpinHalfTimeReversalZ4) {
  const GroupTable group = GroupTable::cyclic(4);
  const LiftFamily lifts = lift_family(cyclic_tables(time_reversal(), 4));
  const GradedCocycle c = cocycle_table(lifts, group);
  EXPECT_EQ(c.grading, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_LE(std::abs(c.mu(1, 1) + 1.0), 1e-12);
  EXPECT_LE(twisted_cocycle_check(c, group), 1e-12);

  const auto square = antiunitary_square(lifts[1]);
  ASSERT_TRUE(square.has_value());
  EXPECT_LE(std::abs(*square + 1.0), 1e-12);
  EXPECT_FALSE(antiunitary_square(lifts[0]).has_value());
}

TEST(Extension, DirectSumKeepsCocycle) {
  Matrix u = Matrix::Zero(4, 4);
  u.topLeftCorner(2, 2) = time_reversal().matrix();
  u.bottomRightCorner(2, 2) = time_reversal().matrix();
  const GradedCocycle single = cyclic_cocycle(time_reversal(), 4);
  const GradedCocycle doubled = cyclic_cocycle(SymmetryOp(u, Grading::antiunitary), 4);
  EXPECT_EQ(single.grading, doubled.grading);
  EXPECT_LE((single.mu - doubled.mu).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Extension, LinearRepresentationIsUngraded) {
  const double w = 2.0 * std::numbers::pi / 3.0;
  Matrix d = Matrix::Identity(3, 3);
  d(1, 1) = std::polar(1.0, w);
  d(2, 2) = std::polar(1.0, 2.0 * w);
  const GradedCocycle c = cyclic_cocycle(SymmetryOp(d, Grading::unitary), 3);
  EXPECT_EQ(c.grading, (std::vector<int>{0, 0, 0}));
  EXPECT_LE(twisted_cocycle_check(c, GroupTable::cyclic(3)), 1e-12);
}

TEST(Extension, CorruptedCocycleIsDetected) {
  const GroupTable group = GroupTable::cyclic(4);
  GradedCocycle c = cyclic_cocycle(time_reversal(), 4);
  for (double eps : {1e-6, 1e-4, 1e-2}) {
    GradedCocycle bad = c;
    bad.mu(1, 2) *= std::polar(1.0, eps);
    const double r = twisted_cocycle_check(bad, group);
    EXPECT_GE(r, 0.5 * eps);
    EXPECT_LE(r, 2.0 * eps);
  }
}

TEST(Extension, RephasedSectionChangesMuByCoboundary) {
  const GroupTable group = GroupTable::cyclic(4);
  const LiftFamily lifts = lift_family(cyclic_tables(time_reversal(), 4));
  const GradedCocycle base = cocycle_table(lifts, group);
  Rng rng(12);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int n = 0; n < 20; ++n) {
    std::vector<Complex> phases;
    for (int g = 0; g < 4; ++g) phases.push_back(std::polar(1.0, angle(rng)));
    const LiftFamily moved = rephase_section(lifts, phases);
    EXPECT_EQ(moved[0].matrix(), Matrix::Identity(2, 2));
    const GradedCocycle c = cocycle_table(moved, group);
    EXPECT_EQ(c.grading, base.grading);
    EXPECT_LE(twisted_cocycle_check(c, group), 1e-8);
    const auto square = antiunitary_square(moved[1]);
    ASSERT_TRUE(square.has_value());
    EXPECT_LE(std::abs(*square + 1.0), 1e-12);
  }
}

TEST(Extension, GradingMustBeHomomorphism) {
  // Z/3 with a generator lifting antiunitarily cannot be graded consistently.
  const GroupTable group = GroupTable::cyclic(3);
  const LiftFamily lifts{SymmetryOp::identity(2), SymmetryOp::conjugation(2), SymmetryOp::identity(2)};
  try {
    grading_homomorphism(lifts, group);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAHomomorphism);
  }
}

TEST(Extension, NonProjectiveFamilyRejected) {
  // Claimed Z/2 action by a unitary that does not square to a scalar.
  Matrix d = Matrix::Identity(2, 2);
  d(1, 1) = I;
  const LiftFamily lifts{SymmetryOp::identity(2), SymmetryOp(d, Grading::unitary)};
  try {
    cocycle_table(lifts, GroupTable::cyclic(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotProjective);
  }
}

TEST(Extension, RejectedElementIsNamed) {
  std::vector<ProbeTable> tables = cyclic_tables(SymmetryOp::conjugation(2), 2);
  tables[1].a[0] = Ray(testing::basis_vector(2, 1));
  try {
    lift_family(tables);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASymmetry);
    EXPECT_NE(std::string(e.what()).find("element 1"), std::string::npos);
  }
}

// ---------------------------------------------------------------------------
// coboundary search

TEST(CoboundarySearch, TrivialClasses) {
  const int gens[] = {1};
  const double w = 2.0 * std::numbers::pi / 3.0;
  Matrix d = Matrix::Identity(2, 2);
  d(1, 1) = std::polar(1.0, w);
  const auto linear = search_trivializing_cochain(cyclic_cocycle(SymmetryOp(d, Grading::unitary), 3),
                                                  GroupTable::cyclic(3), gens);
  ASSERT_TRUE(linear.has_value());
  EXPECT_TRUE(linear->trivializable);

  const auto conj = search_trivializing_cochain(cyclic_cocycle(SymmetryOp::conjugation(2), 2),
                                                GroupTable::cyclic(2), gens);
  ASSERT_TRUE(conj.has_value());
  EXPECT_TRUE(conj->trivializable);
}

TEST(CoboundarySearch, TimeReversalClasses) {
  const int gens[] = {1};
  // On Z/2 (the group T generates on rays) the class is nontrivial: |β|²·(−1) ≠ 1.
  const auto z2 = search_trivializing_cochain(cyclic_cocycle(time_reversal(), 2), GroupTable::cyclic(2), gens);
  ASSERT_TRUE(z2.has_value());
  EXPECT_FALSE(z2->trivializable);
  EXPECT_NEAR(z2->min_residual, 2.0, 1e-9);

  // Pulled back to Z/4 it splits: k ↦ T^k is already a homomorphism since T⁴ = I.
  const auto z4 = search_trivializing_cochain(cyclic_cocycle(time_reversal(), 4), GroupTable::cyclic(4), gens);
  ASSERT_TRUE(z4.has_value());
  EXPECT_TRUE(z4->trivializable);
}

TEST(CoboundarySearch, OutOfScopeInputs) {
  const GroupTable big = GroupTable::cyclic(9);
  GradedCocycle c{std::vector<int>(9, 0), Matrix::Ones(9, 9)};
  const int gens[] = {1};
  EXPECT_FALSE(search_trivializing_cochain(c, big, gens).has_value());

  const GroupTable z4 = GroupTable::cyclic(4);
  GradedCocycle c4{std::vector<int>(4, 0), Matrix::Ones(4, 4)};
  const int not_generating[] = {2};
  EXPECT_FALSE(search_trivializing_cochain(c4, z4, not_generating).has_value());
}

}  // namespace
}  // namespace wignerkit
