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
 * @file symmetry.hpp
 * @brief Orthogonal action on coordinates and its spin lift to states.
 *
 * Conventions, for a generator alpha_{ij} (i < j):
 *   L = exp(A),  A_ij = -alpha_ij, A_ji = alpha_ij
 *   U = exp(-(i/4) sum_{i != j} alpha_ij Gamma_ij),  Gamma_ij = i Gamma_i Gamma_j
 * so that U Gamma_i U^dagger = sum_k L_ik Gamma_k and
 *   encode(rotate_coords(G, L)) = U^dagger encode(G) U.
 */

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cliffbloch/antisym_tensor.hpp"
#include "cliffbloch/clifford_basis.hpp"
#include "cliffbloch/error.hpp"
#include "cliffbloch/linalg.hpp"
#include "cliffbloch/state_coords.hpp"

namespace cliffbloch {

inline constexpr double kOrthogonalityTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-8;

/// Antisymmetric rotation parameters alpha_{ij} over side 2m.
struct RotationGenerator {
  int m = 1;
  AntisymTensor alpha;

  RotationGenerator(int m_, AntisymTensor alpha_) : m(m_), alpha(std::move(alpha_)) {
    if (alpha.grade() != 2) {
      throw Error(ErrorKind::GradeMismatch, "rotation generator must have grade 2");
    }
    if (alpha.side() != 2 * m) {
      throw Error(ErrorKind::DimensionMismatch, "generator side " + std::to_string(alpha.side()) +
                                                    " for m = " + std::to_string(m));
    }
  }
};

class OrthogonalMatrix {
 public:
  explicit OrthogonalMatrix(RealMatrix entries, double tol = kOrthogonalityTol)
      : entries_(std::move(entries)) {
    const RealMatrix gram = entries_.transpose() * entries_ - RealMatrix::identity(entries_.dim());
    const double residual = gram.max_abs();
    if (residual > tol) {
      throw Error(ErrorKind::NotUnitary, "L^T L differs from I by " + std::to_string(residual));
    }
  }

  std::size_t dim() const noexcept { return entries_.dim(); }
  const RealMatrix& matrix() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  double det() const { return determinant(entries_); }

 private:
  RealMatrix entries_;
};

inline OrthogonalMatrix orthogonal_from_generator(const RotationGenerator& gen) {
  RealMatrix a = gen.alpha.to_matrix();
  a *= -1.0;
  return OrthogonalMatrix(matrix_exp(a));
}

inline ComplexMatrix spin_lift(const RotationGenerator& gen, const CliffordBasis& basis) {
  if (basis.mode() != BasisMode::standard) {
    throw Error(ErrorKind::ModeMismatch, "spin_lift acts through the standard generators");
  }
  if (basis.m() != gen.m) {
    throw Error(ErrorKind::DimensionMismatch, "generator for m = " + std::to_string(gen.m) +
                                                  ", basis for m = " + std::to_string(basis.m()));
  }
  // Each unordered pair appears twice in the exponent, so H = (1/2) sum_{i<j} alpha_ij Gamma_ij.
  const auto pairs = basis.grade_elements(2);
  const auto alpha = gen.alpha.values();
  ComplexMatrix h(basis.dim());
  for (std::size_t t = 0; t < alpha.size(); ++t)
    if (alpha[t] != 0.0) h.add_scaled(Complex(0.5 * alpha[t]), pairs[t]);
  return exp_i_hermitian(h, -1);
}

/// G'_{I} = sum_J det(L[I, J]) G_J over increasing index tuples.
inline AntisymTensor rotate_tensor(const AntisymTensor& g, const OrthogonalMatrix& l) {
  if (l.dim() != static_cast<std::size_t>(g.side())) {
    throw Error(ErrorKind::DimensionMismatch, "rotation of dimension " + std::to_string(l.dim()) +
                                                  " applied to side " + std::to_string(g.side()));
  }
  const int k = g.grade();
  AntisymTensor out(g.side(), k);
  if (k == 0) {
    out.values()[0] = g.values()[0];
    return out;
  }
  const auto combos = combinations(g.side(), k);
  const auto in = g.values();
  auto dst = out.values();
  const auto ku = static_cast<std::size_t>(k);
  RealMatrix minor(ku);
  for (std::size_t row = 0; row < combos.size(); ++row) {
    double sum = 0.0;
    for (std::size_t col = 0; col < combos.size(); ++col) {
      if (in[col] == 0.0) continue;
      for (std::size_t a = 0; a < ku; ++a)
        for (std::size_t b = 0; b < ku; ++b)
          minor(a, b) = l(static_cast<std::size_t>(combos[row][a] - 1),
                          static_cast<std::size_t>(combos[col][b] - 1));
      sum += determinant(minor) * in[col];
    }
    dst[row] = sum;
  }
  return out;
}

inline StateCoords rotate_coords(const StateCoords& coords, const OrthogonalMatrix& l) {
  if (l.dim() != static_cast<std::size_t>(coords.side())) {
    throw Error(ErrorKind::DimensionMismatch, "rotation of dimension " + std::to_string(l.dim()) +
                                                  " for coords of side " + std::to_string(coords.side()));
  }
  StateCoords out = coords;
  for (auto& g : out.grades) g = rotate_tensor(g, l);
  return out;
}

/// U^dagger rho U, re-hermitized against rounding.
inline DensityMatrix conjugate_state(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.dim() != rho.matrix().dim()) {
    throw Error(ErrorKind::DimensionMismatch, "unitary of dimension " + std::to_string(u.dim()));
  }
  const double residual = unitarity_residual(u);
  if (residual > kUnitaryTol) {
    throw Error(ErrorKind::NotUnitary, "U^dagger U differs from I by " + std::to_string(residual));
  }
  return DensityMatrix(rho.m(), hermitian_part(u.adjoint() * rho.matrix() * u));
}

}  // namespace cliffbloch
