// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/cli/json_io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <string>

namespace wignerkit::cli {
namespace {

const Complex I(0.0, 1.0);

std::string field_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.field();
  }
  ADD_FAILURE() << "expected an InputError";
  return "";
}

TEST(JsonIo, ComplexAndVectorRoundTripBitExact) {
  Rng rng(1);
  const StateVector v = gaussian_vector(7, rng);
  const StateVector back = vector_from_json(Json::parse(dump(to_json(v))), "v");
  EXPECT_EQ(back, v);
  EXPECT_EQ(complex_from_json(Json::parse("[0.1, -3e-300]"), "z"), Complex(0.1, -3e-300));
}

TEST(JsonIo, RaysAreCanonicalizedOnLoad) {
  Rng rng(2);
  const Ray r = random_ray(5, rng);
  const StateVector moved = Complex(-2.5, 0.7) * r.rep();
  const Ray back = ray_from_json(to_json(moved), "r");
  EXPECT_LE((back.rep() - r.rep()).norm(), 1e-15);
}

TEST(JsonIo, SymmetryOpRoundTrip) {
  const SymmetryOp s = random_symmetry(4, Grading::antiunitary, 11);
  const Json j = to_json(s);
  EXPECT_EQ(j["grading"], "antiunitary");
  EXPECT_EQ(j["dim"], 4);
  const SymmetryOp back = symmetry_from_json(Json::parse(dump(j)));
  EXPECT_EQ(back.matrix(), s.matrix());
  EXPECT_EQ(back.grading(), s.grading());
  EXPECT_EQ(dump(to_json(back)), dump(j));
}

TEST(JsonIo, ProbeTableRoundTrip) {
  const ProbeTable t = make_probe_table(random_symmetry(5, Grading::unitary, 12));
  const std::string text = dump(to_json(t));
  const ProbeTable back = probe_table_from_json(Json::parse(text));
  EXPECT_EQ(dump(to_json(back)), text);
  EXPECT_TRUE(back.v.has_value());
}

TEST(JsonIo, LiftReportRoundTrip) {
  const LiftReport r = wigner_lift(make_probe_table(random_symmetry(3, Grading::antiunitary, 13)));
  const Json j = to_json(r);
  EXPECT_EQ(j["gauge_phase_convention"], "largest-entry-real-positive");
  EXPECT_TRUE(j["accepted"].get<bool>());
  const LiftReport back = lift_report_from_json(Json::parse(dump(j)));
  EXPECT_EQ(dump(to_json(back)), dump(j));
}

TEST(JsonIo, ErrorsNameTheField) {
  Json t = to_json(make_probe_table(SymmetryOp::identity(3)));
  Json missing = t;
  missing.erase("A");
  EXPECT_EQ(field_of([&] { probe_table_from_json(missing); }), "A");

  Json short_ray = t;
  short_ray["A"][1] = Json::array({Json::array({1.0, 0.0})});
  EXPECT_EQ(field_of([&] { probe_table_from_json(short_ray); }), "A[1]");

  Json bad_complex = t;
  bad_complex["base"][0][1] = "x";
  EXPECT_EQ(field_of([&] { probe_table_from_json(bad_complex); }), "base[0][1]");

  Json zero = t;
  zero["B"][0] = Json::array({Json::array({0.0, 0.0}), Json::array({0.0, 0.0}), Json::array({0.0, 0.0})});
  EXPECT_EQ(field_of([&] { probe_table_from_json(zero); }), "B[0]");

  Json too_few = t;
  too_few["V"].erase(0);
  EXPECT_EQ(field_of([&] { probe_table_from_json(too_few); }), "V");

  Json op = to_json(SymmetryOp::identity(2));
  op["grading"] = "linear";
  EXPECT_EQ(field_of([&] { symmetry_from_json(op); }), "grading");
  op = to_json(SymmetryOp::identity(2));
  op["matrix"][0][0] = Json::array({2.0, 0.0});
  EXPECT_EQ(field_of([&] { symmetry_from_json(op); }), "matrix");
}

TEST(JsonIo, GroupValidation) {
  const Json table = to_json(make_probe_table(SymmetryOp::identity(2)));
  Json g{{"order", 2}, {"mult", Json::array({Json::array({0, 1}), Json::array({1, 0})})},
         {"tables", Json{{"0", table}, {"1", table}}}};
  const GroupInput ok = group_from_json(g);
  EXPECT_EQ(ok.group.order(), 2);
  EXPECT_EQ(ok.tables.size(), 2u);

  Json bad = g;
  bad["mult"][1] = Json::array({1, 1});
  EXPECT_EQ(field_of([&] { group_from_json(bad); }), "mult");
  bad = g;
  bad["tables"].erase("1");
  EXPECT_EQ(field_of([&] { group_from_json(bad); }), "tables.1");
  bad = g;
  bad["generators"] = Json::array({5});
  EXPECT_EQ(field_of([&] { group_from_json(bad); }), "generators[0]");
}

TEST(JsonIo, ExtensionReportRoundTrip) {
  ExtensionReport r;
  r.grading = {0, 1};
  r.mu = Matrix::Ones(2, 2);
  r.lifts = {SymmetryOp::identity(2), SymmetryOp::conjugation(2)};
  r.twisted_residual = 1.5e-17;
  r.grading_kernel = {0};
  r.antiunitary_squares = {std::nullopt, Complex(1.0, 0.0)};
  r.coboundary = CoboundarySearch{true, 0.0, {Complex(1.0, 0.0), Complex(0.0, 1.0)}};
  r.tolerance = 1e-8;
  r.accepted = true;
  const std::string text = dump(to_json(r));
  EXPECT_EQ(dump(to_json(extension_report_from_json(Json::parse(text)))), text);
}

TEST(JsonIo, InlineArgumentOrFile) {
  EXPECT_EQ(read_json_argument("[[1, 0]]", "--v1").size(), 1u);
  EXPECT_EQ(field_of([] { read_json_argument("/nonexistent/file.json", "--v1"); }), "--v1");
  EXPECT_EQ(field_of([] { read_json_argument("[1, ", "--v2"); }), "--v2");
}

}  // namespace
}  // namespace wignerkit::cli
