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

// Random inputs and independent reference computations shared by the unit
// and acceptance tests. Nothing here calls the routine it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cliffbloch/cliffbloch.hpp"

namespace cliffbloch::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double gaussian(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

inline AntisymTensor random_tensor(Rng& rng, int side, int grade, double scale = 1.0) {
  AntisymTensor g(side, grade);
  for (double& v : g.values()) v = scale * uniform(rng);
  return g;
}

/// Random hermitian matrix with unit trace and entries of size ~1/dim.
inline ComplexMatrix random_unit_trace_hermitian(Rng& rng, std::size_t dim) {
  ComplexMatrix a(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = gaussian(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      a(i, j) = Complex(gaussian(rng), gaussian(rng));
      a(j, i) = std::conj(a(i, j));
    }
  }
  a *= Complex(1.0 / static_cast<double>(dim));
  const double shift = (1.0 - a.trace().real()) / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) a(i, i) += shift;
  return a;
}

/// Random density matrix B B^dagger / tr, with B of the given rank.
inline ComplexMatrix random_density(Rng& rng, std::size_t dim, std::size_t rank) {
  ComplexMatrix rho(dim);
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<Complex> v(dim);
    for (auto& x : v) x = Complex(gaussian(rng), gaussian(rng));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) rho(i, j) += v[i] * std::conj(v[j]);
  }
  rho *= Complex(1.0 / rho.trace().real());
  return hermitian_part(rho);
}

/// Haar-like rotation by Gram-Schmidt on a gaussian matrix, sign fixed to
/// det = +1. Independent of the exponential map.
inline RealMatrix random_rotation_qr(Rng& rng, std::size_t n) {
  std::vector<std::vector<double>> cols(n, std::vector<double>(n));
  for (auto& c : cols)
    for (auto& x : c) x = gaussian(rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < j; ++p) {
      const double d = std::inner_product(cols[j].begin(), cols[j].end(), cols[p].begin(), 0.0);
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= d * cols[p][i];
    }
    const double norm = std::sqrt(std::inner_product(cols[j].begin(), cols[j].end(), cols[j].begin(), 0.0));
    for (auto& x : cols[j]) x /= norm;
  }
  RealMatrix q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = cols[j][i];
  if (determinant(q) < 0.0)
    for (std::size_t i = 0; i < n; ++i) q(i, 0) = -q(i, 0);
  return q;
}

inline RotationGenerator random_generator(Rng& rng, int m, double scale = 1.0) {
  return RotationGenerator(m, random_tensor(rng, 2 * m, 2, scale));
}

/// Permutation sign by counting inversions.
inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz expansion of the determinant; for small matrices only.
inline double leibniz_det(const RealMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  double sum = 0.0;
  do {
    double prod = permutation_sign(p);
    for (std::size_t i = 0; i < n; ++i) prod *= a(i, static_cast<std::size_t>(p[i]));
    sum += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

/// sum over all orderings of (1..2k) of eps * G G ... G (k factors).
inline double epsilon_full_contraction(const RealMatrix& g) {
  const std::size_t n = g.dim();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  double sum = 0.0;
  do {
    double prod = permutation_sign(p);
    for (std::size_t i = 0; i + 1 < n; i += 2)
      prod *= g(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[i + 1]));
    sum += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

/// prod_i (lambda - mu_i) expanded, ascending coefficients.
inline RealPolynomial poly_from_roots(const std::vector<double>& roots) {
  RealPolynomial p{1.0};
  for (double mu : roots) p = p * RealPolynomial{-mu, 1.0};
  return p;
}

/// All real roots of a real-rooted polynomial by bisection between the
/// critical points found recursively from its derivative.
inline std::vector<double> real_roots_bisection(const RealPolynomial& p, double lo, double hi) {
  if (p.degree() <= 0) return {};
  if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
  std::vector<double> crit = real_roots_bisection(p.derivative(), lo, hi);
  std::vector<double> knots{lo};
  knots.insert(knots.end(), crit.begin(), crit.end());
  knots.push_back(hi);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double a = knots[i];
    double b = knots[i + 1];
    double fa = p(a);
    const double fb = p(b);
    if (fa == 0.0) {
      roots.push_back(a);
      continue;
    }
    if ((fa < 0.0) == (fb < 0.0)) {
      // Touching root at a critical point (even multiplicity).
      if (i + 1 < knots.size() - 1 && std::abs(fb) < 1e-14) roots.push_back(b);
      continue;
    }
    for (int it = 0; it < 200 && b - a > 1e-16 * std::max(1.0, std::abs(a)); ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = p(mid);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? d : INFINITY;
}

/// Rank <= 6 antisymmetric tensor over side 2m: a random 6x6 block rotated
/// by a random rotation of the full space.
inline AntisymTensor random_rank6_tensor(Rng& rng, int m, double scale) {
  AntisymTensor g(2 * m, 2);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) g.set({i, j}, scale * uniform(rng));
  return rotate_tensor(g, OrthogonalMatrix(random_rotation_qr(rng, static_cast<std::size_t>(2 * m))));
}

}  // namespace cliffbloch::testing
