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

/**
 * @file state_coords.hpp
 * @brief Codec between density matrices and graded tensor coordinates.
 *
 *   rho = 2^{-m} ( G0 I + sum_k sum_{i1<..<ik} G_{i1..ik} E_{i1..ik} )
 *   G_{i1..ik} = tr(rho E_{i1..ik})
 *
 * Each antisymmetric component appears once (increasing labels). The same
 * formulas serve the extended (2m+1 generator, grades 0..m) basis.
 */

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cliffbloch/antisym_tensor.hpp"
#include "cliffbloch/clifford_basis.hpp"
#include "cliffbloch/error.hpp"
#include "cliffbloch/linalg.hpp"

namespace cliffbloch {

inline constexpr double kStateHermitianTol = 1e-10;
inline constexpr double kUnitTraceTol = 1e-8;
inline constexpr double kCoordinateImagTol = 1e-10;

/// Scalar plus one antisymmetric tensor per grade 1..max_grade.
struct StateCoords {
  int m = 1;
  BasisMode mode = BasisMode::standard;
  double scalar = 1.0;
  std::vector<AntisymTensor> grades;  // grades[k - 1] holds grade k

  /// The maximally mixed state: scalar 1, every grade zero.
  static StateCoords zero(int m, BasisMode mode = BasisMode::standard) {
    check_qubits(m);
    StateCoords out;
    out.m = m;
    out.mode = mode;
    for (int k = 1; k <= out.max_grade(); ++k) out.grades.emplace_back(out.side(), k);
    return out;
  }

  int side() const noexcept { return mode == BasisMode::standard ? 2 * m : 2 * m + 1; }
  int max_grade() const noexcept { return mode == BasisMode::standard ? 2 * m : m; }

  const AntisymTensor& grade(int k) const { return grades.at(checked_slot(k)); }
  AntisymTensor& grade(int k) { return grades.at(checked_slot(k)); }

  /// Number of non-scalar coordinate slots, 4^m - 1 in both modes.
  std::size_t coordinate_count() const {
    std::size_t count = 0;
    for (const auto& g : grades) count += g.size();
    return count;
  }

  /// Grades k >= 1 that carry a nonzero coefficient.
  std::vector<int> active_grades() const {
    std::vector<int> out;
    for (const auto& g : grades)
      if (!g.is_zero()) out.push_back(g.grade());
    return out;
  }

 private:
  std::size_t checked_slot(int k) const {
    if (k < 1 || k > max_grade()) {
      throw Error(ErrorKind::GradeOutOfRange, "grade " + std::to_string(k) + " outside 1.." +
                                                  std::to_string(max_grade()));
    }
    return static_cast<std::size_t>(k - 1);
  }
};

/// Hermitian 2^m x 2^m matrix. Unit trace and positivity are not enforced
/// here: the first is checked by decode, the second is what the domains
/// module decides.
class DensityMatrix {
 public:
  DensityMatrix(int m, ComplexMatrix matrix) : m_(m), matrix_(std::move(matrix)) {
    check_qubits(m);
    if (matrix_.dim() != (std::size_t{1} << m)) {
      throw Error(ErrorKind::DimensionMismatch, "matrix dimension " + std::to_string(matrix_.dim()) +
                                                    " is not 2^" + std::to_string(m));
    }
    const double residual = hermiticity_residual(matrix_);
    if (residual > kStateHermitianTol) {
      throw Error(ErrorKind::NotHermitian, "state matrix off by " + std::to_string(residual));
    }
  }

  int m() const noexcept { return m_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

 private:
  int m_;
  ComplexMatrix matrix_;
};

inline void check_compatible(const StateCoords& coords, const CliffordBasis& basis) {
  if (coords.mode != basis.mode()) {
    throw Error(ErrorKind::ModeMismatch, std::string("coords are ") +
                                             std::string(to_string(coords.mode)) + ", basis is " +
                                             std::string(to_string(basis.mode())));
  }
  if (coords.m != basis.m()) {
    throw Error(ErrorKind::DimensionMismatch, "coords for m = " + std::to_string(coords.m) +
                                                  ", basis for m = " + std::to_string(basis.m()));
  }
  if (static_cast<int>(coords.grades.size()) != basis.max_grade()) {
    throw Error(ErrorKind::DimensionMismatch, "coords carry " + std::to_string(coords.grades.size()) +
                                                  " grades, basis has " +
                                                  std::to_string(basis.max_grade()));
  }
  for (const auto& g : coords.grades) {
    if (g.side() != basis.side()) {
      throw Error(ErrorKind::DimensionMismatch, "grade " + std::to_string(g.grade()) +
                                                    " has side " + std::to_string(g.side()));
    }
  }
}

inline DensityMatrix encode(const StateCoords& coords, const CliffordBasis& basis) {
  check_compatible(coords, basis);
  ComplexMatrix rho = ComplexMatrix::identity(basis.dim()) * Complex(coords.scalar);
  for (const auto& g : coords.grades) {
    const auto elems = basis.grade_elements(g.grade());
    const auto values = g.values();
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != 0.0) rho.add_scaled(Complex(values[i]), elems[i]);
  }
  rho *= Complex(std::ldexp(1.0, -basis.m()));
  return DensityMatrix(basis.m(), std::move(rho));
}

namespace detail {

inline StateCoords project(const DensityMatrix& rho, const CliffordBasis& basis) {
  if (rho.m() != basis.m()) {
    throw Error(ErrorKind::DimensionMismatch, "state for m = " + std::to_string(rho.m()) +
                                                  ", basis for m = " + std::to_string(basis.m()));
  }
  StateCoords out = StateCoords::zero(basis.m(), basis.mode());
  out.scalar = rho.trace();
  for (int k = 1; k <= basis.max_grade(); ++k) {
    const auto elems = basis.grade_elements(k);
    auto values = out.grade(k).values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const Complex t = trace_of_product(rho.matrix(), elems[i]);
      if (std::abs(t.imag()) > kCoordinateImagTol) {
        throw Error(ErrorKind::NotHermitian,
                    "coordinate has imaginary part " + std::to_string(t.imag()));
      }
      values[i] = t.real();
    }
  }
  return out;
}

inline void require_unit_trace(const DensityMatrix& rho) {
  const double residual = std::abs(rho.trace() - 1.0);
  if (residual > kUnitTraceTol) {
    throw Error(ErrorKind::NonUnitTrace, "trace differs from 1 by " + std::to_string(residual));
  }
}

}  // namespace detail

inline StateCoords decode(const DensityMatrix& rho, const CliffordBasis& basis) {
  detail::require_unit_trace(rho);
  return detail::project(rho, basis);
}

/// 2^{-m}(I + G o E^{(k)}) for a single grade k = G.grade().
inline DensityMatrix tensor_config(const AntisymTensor& g, const CliffordBasis& basis) {
  if (g.grade() < 1 || g.grade() > basis.max_grade()) {
    throw Error(ErrorKind::GradeOutOfRange, "grade " + std::to_string(g.grade()) + " outside 1.." +
                                                std::to_string(basis.max_grade()));
  }
  if (g.side() != basis.side()) {
    throw Error(ErrorKind::DimensionMismatch, "tensor side " + std::to_string(g.side()) +
                                                  " vs basis side " + std::to_string(basis.side()));
  }
  StateCoords coords = StateCoords::zero(basis.m(), basis.mode());
  coords.grade(g.grade()) = g;
  return encode(coords, basis);
}

inline DensityMatrix alt_expand(const StateCoords& coords, const CliffordBasis& basis) {
  if (basis.mode() != BasisMode::extended || coords.mode != BasisMode::extended) {
    throw Error(ErrorKind::ModeMismatch, "alt_expand needs extended coords and basis");
  }
  return encode(coords, basis);
}

struct AltProjection {
  StateCoords coords;
  ComplexMatrix residual;  // rho - alt_expand(coords)
  double residual_norm = 0.0;
};

/// Projection onto the extended basis; the part of rho the expansion does
/// not reproduce is returned as `residual`.
inline AltProjection alt_project(const DensityMatrix& rho, const CliffordBasis& basis) {
  if (basis.mode() != BasisMode::extended) {
    throw Error(ErrorKind::ModeMismatch, "alt_project needs an extended basis");
  }
  AltProjection out{detail::project(rho, basis), ComplexMatrix(basis.dim()), 0.0};
  out.residual = rho.matrix() - alt_expand(out.coords, basis).matrix();
  out.residual_norm = out.residual.frobenius_norm();
  return out;
}

}  // namespace cliffbloch
