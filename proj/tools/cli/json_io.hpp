// Copyright 2026 The cliffbloch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms used by the command-line tool.
//
//   matrix  {"dim": n, "entries": [[re, im], ...]}            (row-major)
//   coords  {"m": 2, "mode": "standard", "scalar": 1.0,
//            "grades": {"2": [{"idx": [1, 2], "val": 0.6}, ...]}}
//
// Coordinate indices may be given in any order; an odd permutation flips
// the sign of the value. Absent components are zero.

#include <string>
#include <vector>

#include <json.hpp>

#include "cliffbloch/cliffbloch.hpp"

namespace cliffbloch::cli {

using nlohmann::json;

inline json matrix_to_json(const ComplexMatrix& a) {
  json entries = json::array();
  for (const Complex& z : a.entries()) entries.push_back({z.real(), z.imag()});
  return {{"dim", a.dim()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != dim * dim) {
      throw Error(ErrorKind::DimensionMismatch, "matrix has " + std::to_string(entries.size()) +
                                                    " entries, expected " + std::to_string(dim * dim));
    }
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (const auto& e : entries) {
      if (e.is_number()) {
        values.emplace_back(e.get<double>(), 0.0);
      } else {
        values.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    return ComplexMatrix(dim, std::move(values));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("matrix JSON: ") + ex.what());
  }
}

inline json tensor_entries_to_json(const AntisymTensor& g) {
  json out = json::array();
  const auto combos = combinations(g.side(), g.grade());
  const auto values = g.values();
  for (std::size_t i = 0; i < combos.size(); ++i) {
    if (values[i] == 0.0) continue;
    const auto labels = combos[i].labels();
    out.push_back({{"idx", std::vector<int>(labels.begin(), labels.end())}, {"val", values[i]}});
  }
  return out;
}

inline void tensor_entries_from_json(const json& entries, AntisymTensor& g) {
  for (const auto& e : entries) {
    std::vector<int> labels = e.at("idx").get<std::vector<int>>();
    if (static_cast<int>(labels.size()) != g.grade()) {
      throw Error(ErrorKind::BadIndex, "index of length " + std::to_string(labels.size()) +
                                           " listed under grade " + std::to_string(g.grade()));
    }
    const int sign = sorting_sign(labels);
    if (sign == 0) throw Error(ErrorKind::BadIndex, "repeated label in index");
    g.at(MultiIndex(labels, g.side())) = sign * e.at("val").get<double>();
  }
}

inline json coords_to_json(const StateCoords& c) {
  json grades = json::object();
  for (const auto& g : c.grades) {
    json entries = tensor_entries_to_json(g);
    if (!entries.empty()) grades[std::to_string(g.grade())] = std::move(entries);
  }
  return {{"m", c.m}, {"mode", std::string(to_string(c.mode))}, {"scalar", c.scalar}, {"grades", std::move(grades)}};
}

inline StateCoords coords_from_json(const json& j) {
  try {
    const int m = j.at("m").get<int>();
    const BasisMode mode = j.contains("mode") ? parse_basis_mode(j.at("mode").get<std::string>())
                                              : BasisMode::standard;
    StateCoords c = StateCoords::zero(m, mode);
    c.scalar = j.value("scalar", 1.0);
    if (j.contains("grades")) {
      for (const auto& [key, entries] : j.at("grades").items()) {
        const int k = std::stoi(key);
        if (k == 0) {
          throw Error(ErrorKind::GradeOutOfRange, "grade 0 is the scalar field");
        }
        tensor_entries_from_json(entries, c.grade(k));
      }
    }
    return c;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("coords JSON: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "coords JSON: grade keys must be integers");
  }
}

inline json invariants_to_json(const InvariantSet& inv) {
  json out = {{"kind", std::string(to_string(inv.kind))}, {"r", inv.r}, {"T4", inv.T4}};
  out["D3"] = inv.D3 ? json(*inv.D3) : json(nullptr);
  out["extras"] = inv.extras;
  return out;
}

inline json spectrum_to_json(const Spectrum& s) {
  json multiplets = json::array();
  for (const auto& mp : s.multiplets) multiplets.push_back({{"value", mp.value}, {"multiplicity", mp.multiplicity}});
  return {{"m", s.m}, {"eigenvalues", s.eigenvalues}, {"multiplets", std::move(multiplets)}, {"sum", s.sum()}};
}

inline json verdict_to_json(const DomainVerdict& v) {
  json out = {{"admissible", v.admissible}, {"boundary", v.boundary}, {"active", v.active},
              {"method", v.method},         {"tol", v.tol}};
  out["violated"] = v.violated ? json(*v.violated) : json(nullptr);
  out["invariants_used"] = invariants_to_json(v.invariants_used);
  return out;
}

inline json report_to_json(const AlgebraReport& r) {
  return {{"m", r.m},
          {"mode", std::string(to_string(r.mode))},
          {"generators", r.generator_count},
          {"elements", r.element_count},
          {"pairs_checked", r.pairs_checked},
          {"exhaustive", r.exhaustive},
          {"anticommutator_residual", r.anticommutator_residual},
          {"hermiticity_residual", r.hermiticity_residual},
          {"trace_residual", r.trace_residual},
          {"orthogonality_residual", r.orthogonality_residual},
          {"chirality_residual", r.chirality_residual},
          {"max_residual", r.max_residual()}};
}

inline RotationGenerator generator_from_json(const json& j) {
  try {
    const int m = j.at("m").get<int>();
    AntisymTensor alpha(2 * m, 2);
    tensor_entries_from_json(j.at("alpha"), alpha);
    return RotationGenerator(m, std::move(alpha));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("generator JSON: ") + ex.what());
  }
}

}  // namespace cliffbloch::cli
