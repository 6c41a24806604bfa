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
 * @file spectra.hpp
 * @brief Closed-form spectra of vector and 2-tensor configurations.
 *
 * Vector:      lambda = (1 +- |G|) / 2^m, each 2^{m-1} times.
 * 2-tensor:    in z = 2^m lambda the spectrum is the root set of
 *
 *   Pbar_+-(z) = z^4 - 4 z^3 + 2(3 - r) z^2 + (4(r - 1) +- D3/6) z
 *                + (2 - (r + 1)^2 + T4 -+ D3/6)
 *
 * each root repeated 2^{m-3} times (m >= 3); at m = 2 a single quartet with
 * D3 = 0. For m >= 4 this holds when rank(G) <= 6, which is checked.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffbloch/antisym_tensor.hpp"
#include "cliffbloch/clifford_basis.hpp"
#include "cliffbloch/error.hpp"
#include "cliffbloch/invariants.hpp"
#include "cliffbloch/linalg.hpp"
#include "cliffbloch/state_coords.hpp"

namespace cliffbloch {

inline constexpr double kMultipletTol = 1e-8;
inline constexpr double kRootImagTol = 1e-8;
inline constexpr double kFactorizationTol = 1e-8;

struct Multiplet {
  double value = 0.0;
  int multiplicity = 0;
};

struct Spectrum {
  int m = 1;
  std::vector<double> eigenvalues;  // ascending, 2^m entries
  std::vector<Multiplet> multiplets;

  double sum() const {
    double s = 0.0;
    for (double v : eigenvalues) s += v;
    return s;
  }
  double min() const { return eigenvalues.front(); }
};

/// Groups sorted values into runs whose consecutive gaps are <= tol.
inline std::vector<Multiplet> degeneracy_pattern(std::vector<double> values, double tol = kMultipletTol) {
  std::sort(values.begin(), values.end());
  std::vector<Multiplet> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > tol) {
      double mean = 0.0;
      for (std::size_t j = start; j < i; ++j) mean += values[j];
      out.push_back({mean / static_cast<double>(i - start), static_cast<int>(i - start)});
      start = i;
    }
  }
  return out;
}

inline std::vector<Multiplet> degeneracy_pattern(const Spectrum& s, double tol = kMultipletTol) {
  return degeneracy_pattern(s.eigenvalues, tol);
}

inline Spectrum make_spectrum(int m, std::vector<double> values, double tol = kMultipletTol) {
  if (values.size() != (std::size_t{1} << m)) {
    throw Error(ErrorKind::DimensionMismatch, "spectrum of " + std::to_string(values.size()) +
                                                  " values for m = " + std::to_string(m));
  }
  std::sort(values.begin(), values.end());
  Spectrum out;
  out.m = m;
  out.multiplets = degeneracy_pattern(values, tol);
  out.eigenvalues = std::move(values);
  return out;
}

inline Spectrum numeric_spectrum(const DensityMatrix& rho) {
  return make_spectrum(rho.m(), hermitian_eigenvalues(rho.matrix()));
}

inline Spectrum vector_spectrum(int m, const AntisymTensor& g, std::optional<double> pseudoscalar = {}) {
  detail::require_grade(g, 1, "vector_spectrum");
  detail::require_side(g, 2 * m, "vector_spectrum");
  const double norm = std::sqrt(vector_invariants(g, pseudoscalar).r);
  const std::size_t half = std::size_t{1} << (m - 1);
  const double scale = std::ldexp(1.0, -m);
  std::vector<double> values(half, (1.0 - norm) * scale);
  values.insert(values.end(), half, (1.0 + norm) * scale);
  return make_spectrum(m, std::move(values));
}

/// Pbar in z = 2^m lambda; sign = +1 or -1.
inline RealPolynomial quartet_polynomial(double r, double t4, double d3, int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  return RealPolynomial{2.0 - (r + 1.0) * (r + 1.0) + t4 - s * d3 / 6.0,
                        4.0 * (r - 1.0) + s * d3 / 6.0, 2.0 * (3.0 - r), -4.0, 1.0};
}

/// The m = 3 quartet polynomials written directly in lambda (monic);
/// equal to Pbar(8 lambda) / 4096.
inline RealPolynomial octet_quartet_polynomial(double r, double t4, double d3, int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  return RealPolynomial{(2.0 - (r + 1.0) * (r + 1.0) + t4 - s * d3 / 6.0) / 4096.0,
                        (4.0 * (r - 1.0) + s * d3 / 6.0) / 512.0, (3.0 - r) / 32.0, -0.5, 1.0};
}

/// Pbar(2^m lambda) / 2^{4m}: the monic quartet factor in lambda.
inline RealPolynomial quartet_factor(int m, double r, double t4, double d3, int sign) {
  return quartet_polynomial(r, t4, d3, sign).rescaled(std::ldexp(1.0, m)) * std::ldexp(1.0, -4 * m);
}

inline RealPolynomial factorized_charpoly(int m, ConfigKind kind, const InvariantSet& inv) {
  if (inv.kind != kind) {
    throw Error(ErrorKind::KindMismatch, "invariants are for a " + std::string(to_string(inv.kind)) +
                                             " configuration, requested " +
                                             std::string(to_string(kind)));
  }
  check_qubits(m);
  if (kind == ConfigKind::vector) {
    const RealPolynomial doublet{(1.0 - inv.r) * std::ldexp(1.0, -2 * m), -std::ldexp(1.0, 1 - m), 1.0};
    return doublet.pow(1u << (m - 1));
  }
  if (m < 2) {
    throw Error(ErrorKind::UnsupportedM, "2-tensor factorization needs m >= 2");
  }
  if (m == 2) return quartet_factor(2, inv.r, inv.T4, 0.0, +1);
  const double d3 = inv.D3.value_or(0.0);
  return (quartet_factor(m, inv.r, inv.T4, d3, +1) * quartet_factor(m, inv.r, inv.T4, d3, -1))
      .pow(1u << (m - 3));
}

namespace detail {

inline std::array<double, 4> real_quartet(const RealPolynomial& p) {
  std::array<double, 4> out{};
  const auto roots = quartic_roots(p);
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(roots[i].imag()) > kRootImagTol) {
      throw Error(ErrorKind::ComplexRoots, "quartet root has imaginary part " +
                                               std::to_string(roots[i].imag()));
    }
    out[i] = roots[i].real();
  }
  return out;
}

/// rho = 2^{-m}(I + sum_{i<j} G_ij E_ij), built from the generators only.
inline ComplexMatrix two_tensor_matrix(int m, const AntisymTensor& g) {
  const auto gammas = generate_gammas(m);
  const std::size_t dim = std::size_t{1} << m;
  ComplexMatrix rho = ComplexMatrix::identity(dim);
  const Complex phase = hermiticity_phase(2);
  std::size_t pos = 0;
  const auto values = g.values();
  for (int i = 0; i < 2 * m; ++i)
    for (int j = i + 1; j < 2 * m; ++j, ++pos)
      if (values[pos] != 0.0)
        rho.add_scaled(phase * values[pos], gammas[static_cast<std::size_t>(i)] * gammas[static_cast<std::size_t>(j)]);
  rho *= Complex(std::ldexp(1.0, -m));
  return rho;
}

}  // namespace detail

/// Coefficient distance between the factorized and the directly computed
/// characteristic polynomial, both expressed in z = 2^m lambda.
inline double factorization_residual(int m, const AntisymTensor& g) {
  const InvariantSet inv = two_tensor_invariants(g);
  const double scale = std::ldexp(1.0, m);
  const RealPolynomial closed = factorized_charpoly(m, ConfigKind::two_tensor, inv).rescaled(1.0 / scale);
  const RealPolynomial direct = char_poly(detail::two_tensor_matrix(m, g)).rescaled(1.0 / scale);
  const double norm = std::ldexp(1.0, static_cast<int>(closed.degree()) * m);
  return relative_coefficient_distance(closed * norm, direct * norm);
}

/// Canonical values a_1 >= a_2 >= ... >= 0 of an antisymmetric G: the
/// nonnegative half of the spectrum of the hermitian matrix iG.
inline std::vector<double> canonical_values(const AntisymTensor& g) {
  detail::require_grade(g, 2, "canonical_values");
  const RealMatrix a = g.to_matrix();
  ComplexMatrix ig(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) ig(i, j) = Complex(0.0, a(i, j));
  const auto ev = hermitian_eigenvalues(ig);
  std::vector<double> out(ev.rbegin(), ev.rbegin() + static_cast<std::ptrdiff_t>(ev.size() / 2));
  for (double& v : out) v = std::max(v, 0.0);
  return out;
}

/// Quartet roots in z for a tensor of rank <= 6, via the resolvent
/// structure of Pbar: in w = z - 1,
///   Pbar_+-(w) = w^4 - 2 r w^2 -+ (D3/6) w + (T4 - r^2),
/// whose resolvent cubic has the roots a_1^2, a_2^2, a_3^2. Hence
/// w = s_1 a_1 + s_2 a_2 + s_3 sgn(D3) a_3 with s_1 s_2 s_3 = -+1.
/// Unlike a generic quartic solver this stays accurate at repeated roots.
inline std::array<double, 4> quartet_roots_resolvent(const AntisymTensor& g, int sign) {
  const InvariantSet inv = two_tensor_invariants(g);
  auto a = canonical_values(g);
  a.resize(std::max<std::size_t>(a.size(), 3), 0.0);
  const double a3 = inv.D3.value_or(0.0) < 0.0 ? -a[2] : a[2];
  const int parity = sign >= 0 ? -1 : 1;
  std::array<double, 4> out{};
  std::size_t slot = 0;
  for (const int s1 : {1, -1})
    for (const int s2 : {1, -1}) {
      const int s3 = parity * s1 * s2;
      out[slot++] = 1.0 + s1 * a[0] + s2 * a[1] + s3 * a3;
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline Spectrum two_tensor_spectrum(int m, const AntisymTensor& g) {
  detail::require_grade(g, 2, "two_tensor_spectrum");
  if (m < 2) throw Error(ErrorKind::UnsupportedM, "2-tensor spectra need m >= 2");
  detail::require_side(g, 2 * m, "two_tensor_spectrum");
  const InvariantSet inv = two_tensor_invariants(g);

  if (m == 2) {
    const double s = std::sqrt(std::max(inv.extras.at("2r2_minus_T4"), 0.0));
    std::vector<double> values;
    for (const double inner : {inv.r + s, inv.r - s}) {
      if (inner < -kRootImagTol) {
        throw Error(ErrorKind::ComplexRoots, "r - sqrt(2r^2 - T4) = " + std::to_string(inner));
      }
      const double a = std::sqrt(std::max(inner, 0.0));
      values.push_back((1.0 - a) / 4.0);
      values.push_back((1.0 + a) / 4.0);
    }
    return make_spectrum(2, std::move(values));
  }

  if (m >= 4) {
    const double residual = factorization_residual(m, g);
    if (residual > kFactorizationTol) {
      throw Error(ErrorKind::FactorizationMismatch,
                  "quartet factorization misses char_poly by " + std::to_string(residual) +
                      " (rank(G) > 6?)");
    }
  }
  const std::size_t repeat = std::size_t{1} << (m - 3);
  const double scale = std::ldexp(1.0, -m);
  std::vector<double> values;
  for (const int sign : {+1, -1}) {
    for (double z : quartet_roots_resolvent(g, sign)) values.insert(values.end(), repeat, z * scale);
  }
  return make_spectrum(m, std::move(values));
}

/// Quartet roots of one sign in lambda, from quartic_roots on the
/// polynomial coefficients (m >= 3). Accurate for well separated roots.
inline std::array<double, 4> quartet_roots(int m, const InvariantSet& inv, int sign) {
  auto z = detail::real_quartet(quartet_polynomial(inv.r, inv.T4, inv.D3.value_or(0.0), sign));
  for (double& v : z) v = std::ldexp(v, -m);
  std::sort(z.begin(), z.end());
  return z;
}

struct TunnelAlphas {
  double plus = 0.0;
  double minus = 0.0;
};

inline TunnelAlphas tunnel_alphas(double x, double y, double z) {
  return {std::hypot(x + y, z), std::hypot(x - y, z)};
}

/// m = 2 family G_12 = x, G_34 = y, G_23 = z.
inline Spectrum tunnel_spectrum(double x, double y, double z) {
  const TunnelAlphas a = tunnel_alphas(x, y, z);
  return make_spectrum(2, {(1.0 - a.plus) / 4.0, (1.0 - a.minus) / 4.0, (1.0 + a.minus) / 4.0,
                           (1.0 + a.plus) / 4.0});
}

inline AntisymTensor tunnel_tensor(double x, double y, double z) {
  AntisymTensor g(4, 2);
  g.set({1, 2}, x);
  g.set({3, 4}, y);
  g.set({2, 3}, z);
  return g;
}

enum class ConfigShape { maximally_mixed, vector, two_tensor, general };

constexpr std::string_view to_string(ConfigShape shape) {
  switch (shape) {
    case ConfigShape::maximally_mixed: return "maximally_mixed";
    case ConfigShape::vector: return "vector";
    case ConfigShape::two_tensor: return "two_tensor";
    case ConfigShape::general: return "general";
  }
  return "general";
}

/// Which closed form, if any, applies to a set of standard-mode coordinates.
/// A pseudoscalar alongside a vector still counts as a vector configuration.
inline ConfigShape classify_config(const StateCoords& coords) {
  if (coords.mode != BasisMode::standard) return ConfigShape::general;
  const auto active = coords.active_grades();
  if (active.empty()) return ConfigShape::maximally_mixed;
  const int top = coords.max_grade();
  const bool vector_like = std::all_of(active.begin(), active.end(), [&](int k) { return k == 1 || k == top; });
  if (vector_like) return ConfigShape::vector;
  if (active.size() == 1 && active.front() == 2) return ConfigShape::two_tensor;
  return ConfigShape::general;
}

inline std::optional<double> pseudoscalar_of(const StateCoords& coords) {
  const double p = coords.grade(coords.max_grade()).values()[0];
  if (p == 0.0) return std::nullopt;
  return p;
}

/// Closed-form spectrum for vector (+pseudoscalar) and 2-tensor coordinates.
inline Spectrum closed_form_spectrum(const StateCoords& coords) {
  switch (classify_config(coords)) {
    case ConfigShape::maximally_mixed:
    case ConfigShape::vector:
      return vector_spectrum(coords.m, coords.grade(1), pseudoscalar_of(coords));
    case ConfigShape::two_tensor:
      return two_tensor_spectrum(coords.m, coords.grade(2));
    case ConfigShape::general:
      break;
  }
  throw Error(ErrorKind::KindMismatch,
              "no closed form: coordinates are not a vector or 2-tensor configuration");
}

}  // namespace cliffbloch
