// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file json_io.hpp
 * @brief JSON encoding of wignerkit values.
 *
 * Complex numbers are [re, im]; vectors are arrays of complex; matrices are
 * arrays of rows. Rays are written through their canonical representative
 * and canonicalized again on load. Every reader names the offending field
 * when it throws.
 */

#pragma once

#include "wignerkit/extension.hpp"
#include "wignerkit/state_space.hpp"
#include "wignerkit/symmetry.hpp"
#include "wignerkit/wigner.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wignerkit::cli {

using Json = nlohmann::json;

/// Malformed input. `field()` is a dotted path such as "A[2][1]".
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

Json to_json(Complex z);
Json to_json(const StateVector& v);
Json to_json(const Ray& r);
Json to_json(const Matrix& m);
Json to_json(const SymmetryOp& s);
Json to_json(const ProbeTable& t);
Json to_json(const LiftReport& r);
Json to_json(const BlochPoint& p);

Complex complex_from_json(const Json& j, const std::string& field);
StateVector vector_from_json(const Json& j, const std::string& field);
Ray ray_from_json(const Json& j, const std::string& field);
Matrix matrix_from_json(const Json& j, const std::string& field);
SymmetryOp symmetry_from_json(const Json& j, const std::string& field = "");
ProbeTable probe_table_from_json(const Json& j, const std::string& field = "");
LiftReport lift_report_from_json(const Json& j, const std::string& field = "");

/// Finite group acting by ray symmetries, one probe table per element.
struct GroupInput {
  GroupTable group;
  std::vector<int> generators;  ///< empty when the file gives none
  std::vector<ProbeTable> tables;
};

/// {"order", "mult", "generators"?, "tables": {label: ProbeTable} or [ProbeTable...]}.
/// Throws InputError for shape problems and for tables that are not a group law.
GroupInput group_from_json(const Json& j);

/// Extension report as written by the `extension` command.
struct ExtensionReport {
  std::vector<int> grading;
  Matrix mu;
  std::vector<SymmetryOp> lifts;
  double twisted_residual = 0.0;
  std::vector<int> grading_kernel;
  std::vector<std::optional<Complex>> antiunitary_squares;  ///< per element; empty for unitary or non-involutive
  std::optional<CoboundarySearch> coboundary;
  double tolerance = kDefaultSymmetryTol;
  bool accepted = false;
};

Json to_json(const ExtensionReport& r);
ExtensionReport extension_report_from_json(const Json& j);

/// Reads a JSON document from a file. Throws InputError naming `field`.
Json read_json_file(const std::filesystem::path& path, const std::string& field);

/// `text` is inline JSON if it starts with '[' or '{', a file path otherwise.
Json read_json_argument(const std::string& text, const std::string& field);

/// Deterministic text form: two-space indent, trailing newline.
std::string dump(const Json& j);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace wignerkit::cli
