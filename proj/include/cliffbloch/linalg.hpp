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
 * @file linalg.hpp
 * @brief Small dense linear algebra: square matrices, Kronecker products, a
 * cyclic Jacobi eigensolver for hermitian matrices, Faddeev-LeVerrier
 * characteristic polynomials and a quartic root solver.
 *
 * Everything here works on matrices of dimension <= 64. There is no sparse
 * path and no BLAS dependency.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliffbloch/error.hpp"

namespace cliffbloch {

using Complex = std::complex<double>;

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kQuarticFallbackThreshold = 1e-12;

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& z) { return std::abs(z); }

inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }

}  // namespace detail

/// Dense square matrix, row-major. T is double or std::complex<double>.
template <typename T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  SquareMatrix(std::size_t dim, std::vector<T> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                      std::to_string(entries_.size()));
    }
  }

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix rows must be square");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t dim() const noexcept { return dim_; }

  T& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const T> entries() const noexcept { return entries_; }
  std::span<T> entries() noexcept { return entries_; }

  SquareMatrix adjoint() const {
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        out(j, i) = detail::conj_of((*this)(i, j));
    return out;
  }

  SquareMatrix transpose() const {
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  T trace() const {
    T sum{};
    for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
    return sum;
  }

  double max_abs() const {
    double best = 0.0;
    for (const auto& x : entries_) best = std::max(best, detail::magnitude(x));
    return best;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (const auto& x : entries_) {
      const double a = detail::magnitude(x);
      sum += a * a;
    }
    return std::sqrt(sum);
  }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    check_same_dim(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
  }

  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    check_same_dim(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
  }

  SquareMatrix& operator*=(const T& scalar) {
    for (auto& x : entries_) x *= scalar;
    return *this;
  }

  /// Adds scalar * rhs in place.
  SquareMatrix& add_scaled(const T& scalar, const SquareMatrix& rhs) {
    check_same_dim(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] += scalar * rhs.entries_[i];
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) {
    return lhs += rhs;
  }
  friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) {
    return lhs -= rhs;
  }
  friend SquareMatrix operator*(SquareMatrix lhs, const T& scalar) {
    return lhs *= scalar;
  }
  friend SquareMatrix operator*(const T& scalar, SquareMatrix rhs) {
    return rhs *= scalar;
  }

  // Skips zero entries of the left factor, which makes products of the
  // monomial Clifford matrices O(n^2).
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same_dim(b);
    const std::size_t n = a.dim_;
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  void check_same_dim(const SquareMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "dimensions " + std::to_string(dim_) + " and " +
                      std::to_string(rhs.dim_) + " differ");
    }
  }

  std::size_t dim_ = 0;
  std::vector<T> entries_;
};

using ComplexMatrix = SquareMatrix<Complex>;
using RealMatrix = SquareMatrix<double>;

/// (A (x) B)[(i*dimB + k), (j*dimB + l)] = A[i,j] * B[k,l].
template <typename T>
SquareMatrix<T> kron(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  SquareMatrix<T> out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const T aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j);
  return out;
}

/// max |A - A^dagger|.
inline double hermiticity_residual(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

/// max |U U^dagger - I|.
inline double unitarity_residual(const ComplexMatrix& u) {
  const ComplexMatrix prod = u * u.adjoint();
  return (prod - ComplexMatrix::identity(u.dim())).max_abs();
}

/// (A + A^dagger) / 2.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  ComplexMatrix out = a + a.adjoint();
  out *= Complex(0.5);
  return out;
}

/// Determinant by Gaussian elimination with partial pivoting.
template <typename T>
T determinant(SquareMatrix<T> a) {
  const std::size_t n = a.dim();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = detail::magnitude(a(col, col));
    for (std::size_t row = col + 1; row < n; ++row) {
      const double mag = detail::magnitude(a(row, col));
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (best == 0.0) return T(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    const T diag = a(col, col);
    det *= diag;
    for (std::size_t row = col + 1; row < n; ++row) {
      const T factor = a(row, col) / diag;
      if (factor == T{}) continue;
      for (std::size_t j = col; j < n; ++j) a(row, j) -= factor * a(col, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Real polynomial with coefficients in ascending degree order. Trailing
/// (exact) zeros are trimmed on construction, so the leading coefficient is
/// nonzero unless the polynomial is identically zero.
class RealPolynomial {
 public:
  RealPolynomial() : coeffs_{0.0} {}

  explicit RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  RealPolynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  std::span<const double> coeffs() const noexcept { return coeffs_; }

  double coeff(int power) const {
    return power >= 0 && power <= degree() ? coeffs_[static_cast<std::size_t>(power)] : 0.0;
  }

  double leading() const noexcept { return coeffs_.back(); }

  template <typename X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  RealPolynomial derivative() const {
    if (coeffs_.size() == 1) return RealPolynomial{0.0};
    std::vector<double> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = static_cast<double>(i) * coeffs_[i];
    return RealPolynomial(std::move(out));
  }

  /// p(s * x): the coefficient of x^k is multiplied by s^k.
  RealPolynomial rescaled(double s) const {
    std::vector<double> out(coeffs_);
    double power = 1.0;
    for (auto& c : out) {
      c *= power;
      power *= s;
    }
    return RealPolynomial(std::move(out));
  }

  RealPolynomial operator*(double s) const {
    std::vector<double> out(coeffs_);
    for (auto& c : out) c *= s;
    return RealPolynomial(std::move(out));
  }

  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RealPolynomial(std::move(out));
  }

  RealPolynomial pow(unsigned exponent) const {
    RealPolynomial result{1.0};
    RealPolynomial base = *this;
    while (exponent > 0) {
      if (exponent & 1u) result = result * base;
      exponent >>= 1u;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
  }

  std::vector<double> coeffs_;
};

/// max_k |a_k - b_k| / max_k |b_k|.
inline double relative_coefficient_distance(const RealPolynomial& a, const RealPolynomial& b) {
  const int deg = std::max(a.degree(), b.degree());
  double diff = 0.0;
  double scale = 0.0;
  for (int k = 0; k <= deg; ++k) {
    diff = std::max(diff, std::abs(a.coeff(k) - b.coeff(k)));
    scale = std::max(scale, std::abs(b.coeff(k)));
  }
  return scale > 0.0 ? diff / scale : diff;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver (cyclic Jacobi)
// ---------------------------------------------------------------------------

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j belongs to values[j]
  int sweeps = 0;
};

inline void require_hermitian(const ComplexMatrix& h, double tol, const char* where) {
  const double scale = h.max_abs();
  const double residual = hermiticity_residual(h);
  if (residual > tol * std::max(scale, 1e-300) && residual > 0.0) {
    throw Error(ErrorKind::NotHermitian, std::string(where) + ": |H - H^dagger|_max = " +
                                             std::to_string(residual));
  }
}

/// Cyclic-by-row complex Jacobi. Each rotation first removes the phase of
/// H[p,q], then applies a real Givens rotation; converged when the
/// off-diagonal Frobenius norm drops below tol * ||H||_F.
inline HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol = kJacobiTolerance) {
  require_hermitian(h, tol, "hermitian_eigen");
  const std::size_t n = h.dim();
  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double norm = a.frobenius_norm();

  auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
  };

  int sweep = 0;
  for (;; ++sweep) {
    if (off_norm() <= tol * norm) break;
    if (sweep >= kJacobiMaxSweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex jpp(c, 0.0);
        const Complex jpq(s, 0.0);
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.sweeps = sweep;
  out.values.reserve(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values.push_back(a(order[col], order[col]).real());
    for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
  }
  return out;
}

inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                                 double tol = kJacobiTolerance) {
  return hermitian_eigen(h, tol).values;
}

/// exp(sign * i * H) via the Jacobi eigendecomposition of H.
inline ComplexMatrix exp_i_hermitian(const ComplexMatrix& h, int sign) {
  const HermitianEigen eig = hermitian_eigen(h);
  const std::size_t n = h.dim();
  const double s = sign >= 0 ? 1.0 : -1.0;
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t col = 0; col < n; ++col) {
    const Complex factor = std::polar(1.0, s * eig.values[col]);
    for (std::size_t row = 0; row < n; ++row) scaled(row, col) *= factor;
  }
  return scaled * eig.vectors.adjoint();
}

/// exp(A) for a real matrix by scaling and squaring a truncated Taylor series.
inline RealMatrix matrix_exp(const RealMatrix& a, double series_tol = 1e-13) {
  const std::size_t n = a.dim();
  double norm = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::abs(a(i, j));
    norm = std::max(norm, col);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  RealMatrix scaled = a * std::ldexp(1.0, -squarings);
  RealMatrix result = RealMatrix::identity(n);
  RealMatrix term = RealMatrix::identity(n);
  for (int k = 1; k < 60; ++k) {
    term = term * scaled;
    term *= 1.0 / k;
    result += term;
    if (term.max_abs() <= series_tol * result.max_abs()) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial
// ---------------------------------------------------------------------------

/// Coefficients of det(A - lambda I) by the Faddeev-LeVerrier recursion
///   M_k = A M_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(A M_k) / k,
/// which yields det(lambda I - A) = sum c_j lambda^j; the result is multiplied
/// by (-1)^n. A must be hermitian so that the coefficients are real.
inline RealPolynomial char_poly(const ComplexMatrix& a) {
  require_hermitian(a, kJacobiTolerance, "char_poly");
  const std::size_t n = a.dim();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -(a * m).trace() / static_cast<double>(k);
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  std::vector<double> real(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (std::abs(c[j].imag()) > 1e-10 * std::max(1.0, std::abs(c[j].real()))) {
      throw Error(ErrorKind::NotHermitian,
                  "char_poly: coefficient " + std::to_string(j) + " has imaginary residue " +
                      std::to_string(c[j].imag()));
    }
    real[j] = sign * c[j].real();
  }
  return RealPolynomial(std::move(real));
}

// ---------------------------------------------------------------------------
// Quartic roots
// ---------------------------------------------------------------------------

namespace detail {

inline std::array<Complex, 4> durand_kerner(const std::array<double, 4>& monic_low) {
  // monic_low holds c0..c3 of x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
  auto eval = [&](Complex x) {
    return (((x + monic_low[3]) * x + monic_low[2]) * x + monic_low[1]) * x + monic_low[0];
  };
  std::array<Complex, 4> z;
  const Complex seed(0.4, 0.9);
  z[0] = seed;
  for (int i = 1; i < 4; ++i) z[i] = z[i - 1] * seed;
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (int i = 0; i < 4; ++i) {
      Complex denom(1.0);
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) == 0.0) denom = 1e-300;
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-16) break;
  }
  return z;
}

// Largest real root of the monic cubic x^3 + a x^2 + b x + c, by Newton
// iteration started above the Cauchy bound (monotone convergence there).
inline double largest_real_cubic_root(double a, double b, double c) {
  double x = 1.0 + std::max({std::abs(a), std::abs(b), std::abs(c)});
  for (int iter = 0; iter < 200; ++iter) {
    const double f = ((x + a) * x + b) * x + c;
    const double df = (3.0 * x + 2.0 * a) * x + b;
    if (df == 0.0) break;
    const double step = f / df;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

inline double cubic_discriminant(double a, double b, double c) {
  return 18.0 * a * b * c - 4.0 * a * a * a * c + a * a * b * b - 4.0 * b * b * b - 27.0 * c * c;
}

}  // namespace detail

/// Four complex roots of a degree-4 real polynomial by Ferrari's method,
/// falling back to Durand-Kerner when the resolvent cubic is (nearly)
/// degenerate. The polynomial is rescaled so its roots are O(1) before any
/// threshold is applied; every root is finally Newton-polished.
inline std::array<Complex, 4> quartic_roots(const RealPolynomial& p) {
  if (p.degree() != 4) {
    throw Error(ErrorKind::DegreeMismatch,
                "quartic_roots needs degree 4, got " + std::to_string(p.degree()));
  }
  const double lead = p.leading();
  const double b0 = p.coeff(3) / lead;
  const double c0 = p.coeff(2) / lead;
  const double d0 = p.coeff(1) / lead;
  const double e0 = p.coeff(0) / lead;

  const double scale = std::max({std::abs(b0), std::sqrt(std::abs(c0)), std::cbrt(std::abs(d0)),
                                 std::sqrt(std::sqrt(std::abs(e0)))});
  std::array<Complex, 4> roots{};
  if (scale == 0.0) return roots;

  // x = scale * y
  const double b = b0 / scale;
  const double c = c0 / (scale * scale);
  const double d = d0 / (scale * scale * scale);
  const double e = e0 / (scale * scale * scale * scale);

  // y = u - b/4 gives u^4 + pu^2 + qu + r.
  const double p2 = c - 3.0 * b * b / 8.0;
  const double q = d - b * c / 2.0 + b * b * b / 8.0;
  const double r = e - b * d / 4.0 + b * b * c / 16.0 - 3.0 * b * b * b * b / 256.0;

  std::array<Complex, 4> u{};
  if (std::abs(q) < 1e-14) {
    const Complex disc = std::sqrt(Complex(p2 * p2 - 4.0 * r));
    const Complex w1 = (-p2 + disc) / 2.0;
    const Complex w2 = (-p2 - disc) / 2.0;
    u = {std::sqrt(w1), -std::sqrt(w1), std::sqrt(w2), -std::sqrt(w2)};
  } else {
    // Resolvent m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0 has a positive root.
    const double ra = p2;
    const double rb = p2 * p2 / 4.0 - r;
    const double rc = -q * q / 8.0;
    if (std::abs(detail::cubic_discriminant(ra, rb, rc)) < kQuarticFallbackThreshold) {
      u = detail::durand_kerner({r, q, p2, 0.0});
    } else {
      const double m = detail::largest_real_cubic_root(ra, rb, rc);
      const double root2m = std::sqrt(2.0 * m);
      std::size_t slot = 0;
      for (const double s1 : {1.0, -1.0}) {
        const Complex inner = std::sqrt(Complex(-2.0 * p2 - 2.0 * m - s1 * std::sqrt(2.0) * q / std::sqrt(m)));
        u[slot++] = (s1 * root2m + inner) / 2.0;
        u[slot++] = (s1 * root2m - inner) / 2.0;
      }
    }
  }

  for (std::size_t i = 0; i < 4; ++i) roots[i] = scale * (u[i] - b / 4.0);

  // Newton polish on the monic original; keep a step only if it helps.
  auto eval = [&](Complex x) { return (((x + b0) * x + c0) * x + d0) * x + e0; };
  auto deriv = [&](Complex x) { return ((4.0 * x + 3.0 * b0) * x + 2.0 * c0) * x + d0; };
  for (auto& x : roots) {
    for (int iter = 0; iter < 4; ++iter) {
      const Complex fx = eval(x);
      const Complex dfx = deriv(x);
      if (std::abs(dfx) == 0.0) break;
      const Complex candidate = x - fx / dfx;
      if (std::abs(eval(candidate)) < std::abs(fx)) {
        x = candidate;
      } else {
        break;
      }
    }
  }
  return roots;
}

}  // namespace cliffbloch
