// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/cli/json_io.hpp"

#include "wignerkit/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace wignerkit::cli {

namespace {

std::string join(const std::string& field, const std::string& child) {
  return field.empty() ? child : field + "." + child;
}

std::string at(const std::string& field, std::size_t k) { return field + "[" + std::to_string(k) + "]"; }

const Json& member(const Json& j, const std::string& field, const char* key) {
  if (!j.is_object()) throw InputError(field.empty() ? "<root>" : field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(join(field, key), "missing");
  return *it;
}

double number_from_json(const Json& j, const std::string& field) {
  if (!j.is_number()) throw InputError(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(field, "not finite");
  return x;
}

Index index_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InputError(field, "expected an integer");
  return j.get<Index>();
}

bool bool_from_json(const Json& j, const std::string& field) {
  if (!j.is_boolean()) throw InputError(field, "expected true or false");
  return j.get<bool>();
}

const Json& array_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field, "expected an array");
  return j;
}

Grading grading_from_json(const Json& j, const std::string& field) {
  if (j == "unitary") return Grading::unitary;
  if (j == "antiunitary") return Grading::antiunitary;
  throw InputError(field, "expected \"unitary\" or \"antiunitary\"");
}

std::vector<Ray> rays_from_json(const Json& j, const std::string& field, Index dim) {
  std::vector<Ray> out;
  for (std::size_t k = 0; k < array_from_json(j, field).size(); ++k) {
    out.push_back(ray_from_json(j[k], at(field, k)));
    if (out.back().dim() != dim) throw InputError(at(field, k), "expected length " + std::to_string(dim));
  }
  return out;
}

Json rays_to_json(const std::vector<Ray>& rays) {
  Json out = Json::array();
  for (const Ray& r : rays) out.push_back(to_json(r));
  return out;
}

std::vector<int> ints_from_json(const Json& j, const std::string& field) {
  std::vector<int> out;
  for (std::size_t k = 0; k < array_from_json(j, field).size(); ++k) {
    out.push_back(static_cast<int>(index_from_json(j[k], at(field, k))));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// writers

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const StateVector& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(to_json(v[k]));
  return out;
}

Json to_json(const Ray& r) { return to_json(r.rep()); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(to_json(StateVector(m.row(r).transpose())));
  return out;
}

Json to_json(const SymmetryOp& s) {
  return Json{{"dim", s.matrix().rows()}, {"grading", to_string(s.grading())}, {"matrix", to_json(s.matrix())}};
}

Json to_json(const ProbeTable& t) {
  Json out{{"dim", t.dim}, {"tolerance", t.tolerance}, {"base", to_json(t.base)},
           {"A", rays_to_json(t.a)}, {"B", rays_to_json(t.b)}};
  if (t.v) out["V"] = rays_to_json(*t.v);
  return out;
}

Json to_json(const LiftReport& r) {
  Json out = to_json(r.lift);
  out["residuals"] = Json{{"probe_max", r.residuals.probe_max},
                          {"orthonormality", r.residuals.orthonormality},
                          {"alpha_consistency", r.residuals.alpha_consistency}};
  out["tolerance"] = r.tolerance;
  out["accepted"] = r.accepted();
  out["gauge_phase_convention"] = std::string(kGaugeConvention);
  return out;
}

Json to_json(const BlochPoint& p) {
  const auto c = p.cartesian();
  return Json{{"x", p.x}, {"z", to_json(p.z)}, {"cartesian", Json::array({c[0], c[1], c[2]})}};
}

// ---------------------------------------------------------------------------
// readers

Complex complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw InputError(field, "expected a complex number [re, im]");
  return {number_from_json(j[0], field + "[0]"), number_from_json(j[1], field + "[1]")};
}

StateVector vector_from_json(const Json& j, const std::string& field) {
  array_from_json(j, field);
  if (j.empty()) throw InputError(field, "empty vector");
  StateVector v(static_cast<Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v[static_cast<Index>(k)] = complex_from_json(j[k], at(field, k));
  return v;
}

Ray ray_from_json(const Json& j, const std::string& field) {
  const StateVector v = vector_from_json(j, field);
  try {
    return Ray(v);
  } catch (const Error& e) {
    throw InputError(field, e.what());
  }
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
  array_from_json(j, field);
  if (j.empty()) throw InputError(field, "empty matrix");
  const Index rows = static_cast<Index>(j.size());
  Matrix m;
  for (Index r = 0; r < rows; ++r) {
    const StateVector row = vector_from_json(j[static_cast<std::size_t>(r)], at(field, static_cast<std::size_t>(r)));
    if (r == 0) m.resize(rows, row.size());
    if (row.size() != m.cols()) {
      throw InputError(at(field, static_cast<std::size_t>(r)), "expected length " + std::to_string(m.cols()));
    }
    m.row(r) = row.transpose();
  }
  return m;
}

SymmetryOp symmetry_from_json(const Json& j, const std::string& field) {
  const Matrix m = matrix_from_json(member(j, field, "matrix"), join(field, "matrix"));
  const Grading g = grading_from_json(member(j, field, "grading"), join(field, "grading"));
  if (j.contains("dim") && index_from_json(j["dim"], join(field, "dim")) != m.rows()) {
    throw InputError(join(field, "dim"), "does not match the matrix size");
  }
  if (m.rows() != m.cols()) throw InputError(join(field, "matrix"), "expected a square matrix");
  try {
    return SymmetryOp(m, g);
  } catch (const Error& e) {
    throw InputError(join(field, "matrix"), e.what());
  }
}

ProbeTable probe_table_from_json(const Json& j, const std::string& field) {
  const Index dim = index_from_json(member(j, field, "dim"), join(field, "dim"));
  if (dim < 1) throw InputError(join(field, "dim"), "must be at least 1");
  double tolerance = kDefaultSymmetryTol;
  if (j.contains("tolerance")) {
    tolerance = number_from_json(j["tolerance"], join(field, "tolerance"));
    if (!(tolerance > 0.0)) throw InputError(join(field, "tolerance"), "must be positive");
  }
  const Ray base = ray_from_json(member(j, field, "base"), join(field, "base"));
  if (base.dim() != dim) throw InputError(join(field, "base"), "expected length " + std::to_string(dim));
  ProbeTable t{dim, base, {}, {}, std::nullopt, tolerance};
  t.a = rays_from_json(member(j, field, "A"), join(field, "A"), dim);
  t.b = rays_from_json(member(j, field, "B"), join(field, "B"), dim);
  const auto expected = static_cast<std::size_t>(dim - 1);
  if (t.a.size() != expected) throw InputError(join(field, "A"), "expected " + std::to_string(expected) + " rays");
  if (t.b.size() != expected) throw InputError(join(field, "B"), "expected " + std::to_string(expected) + " rays");
  if (j.contains("V")) {
    t.v = rays_from_json(j["V"], join(field, "V"), dim);
    if (t.v->size() != expected) throw InputError(join(field, "V"), "expected " + std::to_string(expected) + " rays");
  }
  return t;
}

LiftReport lift_report_from_json(const Json& j, const std::string& field) {
  LiftReport r{symmetry_from_json(j, field), {}, kDefaultSymmetryTol};
  const std::string res = join(field, "residuals");
  const Json& residuals = member(j, field, "residuals");
  r.residuals.probe_max = number_from_json(member(residuals, res, "probe_max"), join(res, "probe_max"));
  r.residuals.orthonormality = number_from_json(member(residuals, res, "orthonormality"), join(res, "orthonormality"));
  r.residuals.alpha_consistency =
      number_from_json(member(residuals, res, "alpha_consistency"), join(res, "alpha_consistency"));
  r.tolerance = number_from_json(member(j, field, "tolerance"), join(field, "tolerance"));
  if (bool_from_json(member(j, field, "accepted"), join(field, "accepted")) != r.accepted()) {
    throw InputError(join(field, "accepted"), "inconsistent with residuals and tolerance");
  }
  if (member(j, field, "gauge_phase_convention") != kGaugeConvention) {
    throw InputError(join(field, "gauge_phase_convention"), "unknown convention");
  }
  return r;
}

GroupInput group_from_json(const Json& j) {
  const Index order = index_from_json(member(j, "", "order"), "order");
  if (order < 1) throw InputError("order", "must be at least 1");
  const Json& mult_json = array_from_json(member(j, "", "mult"), "mult");
  if (mult_json.size() != static_cast<std::size_t>(order)) throw InputError("mult", "expected order rows");
  std::vector<std::vector<int>> mult;
  for (std::size_t r = 0; r < mult_json.size(); ++r) {
    mult.push_back(ints_from_json(mult_json[r], at("mult", r)));
    if (mult.back().size() != static_cast<std::size_t>(order)) {
      throw InputError(at("mult", r), "expected " + std::to_string(order) + " entries");
    }
  }
  std::optional<GroupTable> group;
  try {
    group.emplace(std::move(mult));
  } catch (const Error& e) {
    throw InputError("mult", e.what());
  }

  std::vector<int> generators;
  if (j.contains("generators")) {
    generators = ints_from_json(j["generators"], "generators");
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (generators[k] < 0 || generators[k] >= order) throw InputError(at("generators", k), "not an element");
    }
  }

  const Json& tables_json = member(j, "", "tables");
  std::vector<ProbeTable> tables;
  for (Index g = 0; g < order; ++g) {
    const std::string label = std::to_string(g);
    if (tables_json.is_array()) {
      if (tables_json.size() != static_cast<std::size_t>(order)) throw InputError("tables", "expected order tables");
      tables.push_back(probe_table_from_json(tables_json[static_cast<std::size_t>(g)], at("tables", static_cast<std::size_t>(g))));
    } else if (tables_json.is_object()) {
      if (!tables_json.contains(label)) throw InputError("tables." + label, "missing");
      tables.push_back(probe_table_from_json(tables_json[label], "tables." + label));
    } else {
      throw InputError("tables", "expected an object keyed by element or an array");
    }
    if (tables.back().dim != tables.front().dim) throw InputError("tables." + label + ".dim", "dimensions differ");
  }
  return GroupInput{std::move(*group), std::move(generators), std::move(tables)};
}

Json to_json(const ExtensionReport& r) {
  Json lifts = Json::array();
  for (const SymmetryOp& s : r.lifts) lifts.push_back(to_json(s));
  Json squares = Json::array();
  for (const auto& c : r.antiunitary_squares) squares.push_back(c ? to_json(*c) : Json(nullptr));
  Json coboundary(nullptr);
  if (r.coboundary) {
    Json cochain = Json::array();
    for (Complex b : r.coboundary->cochain) cochain.push_back(to_json(b));
    coboundary = Json{{"trivializable", r.coboundary->trivializable},
                      {"min_residual", r.coboundary->min_residual},
                      {"cochain", cochain},
                      {"approximate", true}};
  }
  return Json{{"order", r.grading.size()},
              {"grading", r.grading},
              {"mu", to_json(r.mu)},
              {"lifts", lifts},
              {"residuals", Json{{"twisted_cocycle", r.twisted_residual}}},
              {"certificates", Json{{"grading_kernel", r.grading_kernel}, {"antiunitary_squares", squares}}},
              {"coboundary_search", coboundary},
              {"tolerance", r.tolerance},
              {"accepted", r.accepted}};
}

ExtensionReport extension_report_from_json(const Json& j) {
  ExtensionReport r;
  const Index order = index_from_json(member(j, "", "order"), "order");
  r.grading = ints_from_json(member(j, "", "grading"), "grading");
  if (r.grading.size() != static_cast<std::size_t>(order)) throw InputError("grading", "expected order entries");
  r.mu = matrix_from_json(member(j, "", "mu"), "mu");
  if (r.mu.rows() != order || r.mu.cols() != order) throw InputError("mu", "expected an order × order table");
  const Json& lifts = array_from_json(member(j, "", "lifts"), "lifts");
  for (std::size_t k = 0; k < lifts.size(); ++k) r.lifts.push_back(symmetry_from_json(lifts[k], at("lifts", k)));
  const Json& residuals = member(j, "", "residuals");
  r.twisted_residual = number_from_json(member(residuals, "residuals", "twisted_cocycle"), "residuals.twisted_cocycle");
  const Json& certs = member(j, "", "certificates");
  r.grading_kernel = ints_from_json(member(certs, "certificates", "grading_kernel"), "certificates.grading_kernel");
  const Json& squares = array_from_json(member(certs, "certificates", "antiunitary_squares"),
                                        "certificates.antiunitary_squares");
  for (std::size_t k = 0; k < squares.size(); ++k) {
    if (squares[k].is_null()) {
      r.antiunitary_squares.emplace_back(std::nullopt);
    } else {
      r.antiunitary_squares.emplace_back(complex_from_json(squares[k], at("certificates.antiunitary_squares", k)));
    }
  }
  const Json& cob = member(j, "", "coboundary_search");
  if (!cob.is_null()) {
    CoboundarySearch c;
    c.trivializable = bool_from_json(member(cob, "coboundary_search", "trivializable"), "coboundary_search.trivializable");
    c.min_residual = number_from_json(member(cob, "coboundary_search", "min_residual"), "coboundary_search.min_residual");
    c.cochain = std::vector<Complex>();
    const Json& cochain = array_from_json(member(cob, "coboundary_search", "cochain"), "coboundary_search.cochain");
    for (std::size_t k = 0; k < cochain.size(); ++k) {
      c.cochain.push_back(complex_from_json(cochain[k], at("coboundary_search.cochain", k)));
    }
    r.coboundary = c;
  }
  r.tolerance = number_from_json(member(j, "", "tolerance"), "tolerance");
  r.accepted = bool_from_json(member(j, "", "accepted"), "accepted");
  return r;
}

// ---------------------------------------------------------------------------
// files

Json read_json_file(const std::filesystem::path& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw InputError(field, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(field, path.string() + ": " + e.what());
  }
}

Json read_json_argument(const std::string& text, const std::string& field) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(field, e.what());
    }
  }
  return read_json_file(text, field);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("--out", "cannot write " + path.string());
  out << dump(j);
  if (!out) throw InputError("--out", "write failed for " + path.string());
}

}  // namespace wignerkit::cli
