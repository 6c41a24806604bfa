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
 * @file invariants.hpp
 * @brief Rotation invariants of grade-1 and grade-2 coordinate tensors.
 *
 * For an antisymmetric G over side n:
 *   r  = sum_{i<j} G_ij^2
 *   T4 = tr((G^T G)^2)
 *   D3 = eps_{i1..i6} G_{i1i2} G_{i3i4} G_{i5i6} = 48 Pf(G)     (n = 6)
 * and 2 r^2 - T4 = 4 sum_{|S|=4} Pf(G_S)^2.
 */

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffbloch/antisym_tensor.hpp"
#include "cliffbloch/error.hpp"
#include "cliffbloch/linalg.hpp"

namespace cliffbloch {

enum class ConfigKind { vector, two_tensor };

constexpr std::string_view to_string(ConfigKind kind) {
  return kind == ConfigKind::vector ? "vector" : "two_tensor";
}

struct InvariantSet {
  ConfigKind kind = ConfigKind::two_tensor;
  double r = 0.0;
  double T4 = 0.0;
  std::optional<double> D3;
  std::map<std::string, double> extras;
};

namespace detail {

inline void require_grade(const AntisymTensor& g, int grade, const char* where) {
  if (g.grade() != grade) {
    throw Error(ErrorKind::GradeMismatch, std::string(where) + " needs grade " +
                                              std::to_string(grade) + ", got " +
                                              std::to_string(g.grade()));
  }
}

inline void require_side(const AntisymTensor& g, int side, const char* where) {
  if (g.side() != side) {
    throw Error(ErrorKind::DimensionMismatch, std::string(where) + " needs side " +
                                                  std::to_string(side) + ", got " +
                                                  std::to_string(g.side()));
  }
}

inline double pfaffian_rec(const RealMatrix& a, std::vector<std::size_t>& rows) {
  if (rows.empty()) return 1.0;
  const std::size_t first = rows.front();
  double sum = 0.0;
  for (std::size_t j = 1; j < rows.size(); ++j) {
    const double entry = a(first, rows[j]);
    if (entry == 0.0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(rows.size() - 2);
    for (std::size_t t = 1; t < rows.size(); ++t)
      if (t != j) rest.push_back(rows[t]);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    sum += sign * entry * pfaffian_rec(a, rest);
  }
  return sum;
}

}  // namespace detail

/// Pfaffian of the principal submatrix on `rows` (0-based), by expansion
/// along the first row. Zero for an odd number of rows.
inline double pfaffian(const RealMatrix& a, std::vector<std::size_t> rows) {
  if (rows.size() % 2 == 1) return 0.0;
  return detail::pfaffian_rec(a, rows);
}

inline double pfaffian(const RealMatrix& a) {
  std::vector<std::size_t> rows(a.dim());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return pfaffian(a, std::move(rows));
}

/// Sum of Pf(G_S)^2 over all principal index subsets S of the given size.
inline double pfaffian_minor_sum(const AntisymTensor& g, int size) {
  detail::require_grade(g, 2, "pfaffian_minor_sum");
  if (size % 2 == 1 || size > g.side()) return 0.0;
  const RealMatrix a = g.to_matrix();
  double sum = 0.0;
  for (const auto& subset : combinations(g.side(), size)) {
    std::vector<std::size_t> rows;
    for (int label : subset.labels()) rows.push_back(static_cast<std::size_t>(label - 1));
    const double pf = pfaffian(a, std::move(rows));
    sum += pf * pf;
  }
  return sum;
}

inline double frobenius_r(const AntisymTensor& g) {
  detail::require_grade(g, 2, "frobenius_r");
  return g.norm_sq();
}

inline double trace_T4(const AntisymTensor& g) {
  detail::require_grade(g, 2, "trace_T4");
  const RealMatrix a = g.to_matrix();
  const RealMatrix sq = a.transpose() * a;
  double sum = 0.0;
  for (double v : sq.entries()) sum += v * v;
  return sum;
}

inline double epsilon_D3(const AntisymTensor& g) {
  detail::require_grade(g, 2, "epsilon_D3");
  detail::require_side(g, 6, "epsilon_D3");
  return 48.0 * pfaffian(g.to_matrix());
}

/// Literal epsilon contraction over all 720 orderings of (1..6).
inline double epsilon_D3_bruteforce(const AntisymTensor& g) {
  detail::require_grade(g, 2, "epsilon_D3_bruteforce");
  detail::require_side(g, 6, "epsilon_D3_bruteforce");
  const RealMatrix a = g.to_matrix();
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  double sum = 0.0;
  do {
    std::vector<int> copy = perm;
    const int sign = sorting_sign(copy);
    sum += sign * a(perm[0], perm[1]) * a(perm[2], perm[3]) * a(perm[4], perm[5]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// m = 2: Gt_{ab} = eps_{abcd} G_{cd}; m = 3: At_{ab} = eps_{abcdef} G_{cd} G_{ef}.
/// Repeated indices run over all orderings.
inline AntisymTensor dual_tensor(const AntisymTensor& g, int m) {
  detail::require_grade(g, 2, "dual_tensor");
  if (m != 2 && m != 3) {
    throw Error(ErrorKind::UnsupportedM, "dual_tensor is defined for m = 2, 3; got " + std::to_string(m));
  }
  detail::require_side(g, 2 * m, "dual_tensor");
  const int n = 2 * m;
  const RealMatrix a = g.to_matrix();
  AntisymTensor out(n, 2);
  auto values = out.values();
  std::size_t pos = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, ++pos) {
      std::vector<int> rest;
      for (int t = 0; t < n; ++t)
        if (t != p && t != q) rest.push_back(t);
      double sum = 0.0;
      do {
        std::vector<int> full{p, q};
        full.insert(full.end(), rest.begin(), rest.end());
        const int sign = sorting_sign(full);
        double prod = sign;
        for (std::size_t t = 0; t < rest.size(); t += 2) prod *= a(rest[t], rest[t + 1]);
        sum += prod;
      } while (std::next_permutation(rest.begin(), rest.end()));
      values[pos] = sum;
    }
  }
  return out;
}

/// Both sides of 2 r^2 - T4 = (1/16)(tr(Gt G))^2 (m = 2) or
/// 2 r^2 - T4 = (1/32) tr(At^T At) (m = 3).
inline std::pair<double, double> dual_identity(const AntisymTensor& g, int m) {
  const AntisymTensor dual = dual_tensor(g, m);
  const double lhs = 2.0 * std::pow(frobenius_r(g), 2) - trace_T4(g);
  const RealMatrix d = dual.to_matrix();
  if (m == 2) {
    const double t = (d * g.to_matrix()).trace();
    return {lhs, t * t / 16.0};
  }
  return {lhs, (d.transpose() * d).trace() / 32.0};
}

/// Both sides of 2 r^2 - T4 = 4 det(G) at m = 2.
inline std::pair<double, double> det_identity_check(const AntisymTensor& g, int m = 2) {
  detail::require_grade(g, 2, "det_identity_check");
  if (m != 2) {
    throw Error(ErrorKind::UnsupportedM, "det identity is stated for m = 2; got " + std::to_string(m));
  }
  detail::require_side(g, 4, "det_identity_check");
  const double lhs = 2.0 * std::pow(frobenius_r(g), 2) - trace_T4(g);
  return {lhs, 4.0 * determinant(g.to_matrix())};
}

/// V_i = eps_{i i1..i6} G_{i1i2} G_{i3i4} G_{i5i6} over side 7; equals
/// (-1)^{i-1} 48 Pf of the block with index i removed.
inline std::vector<double> pseudo_vector_V(const AntisymTensor& g) {
  detail::require_grade(g, 2, "pseudo_vector_V");
  detail::require_side(g, 7, "pseudo_vector_V");
  const RealMatrix a = g.to_matrix();
  std::vector<double> out(7);
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t t = 0; t < 7; ++t)
      if (t != i) rows.push_back(t);
    out[i] = (i % 2 == 0 ? 48.0 : -48.0) * pfaffian(a, std::move(rows));
  }
  return out;
}

inline int scale_dimension(std::string_view name) {
  if (name == "scalar") return 1;
  if (name == "r") return 2;
  if (name == "D3") return 3;
  if (name == "T4" || name == "r2" || name == "r^2") return 4;
  throw Error(ErrorKind::UnknownName, "no scale dimension for '" + std::string(name) + "'");
}

/// Invariants of a vector configuration; a pseudoscalar coefficient adds
/// one more orthogonal direction.
inline InvariantSet vector_invariants(const AntisymTensor& g, std::optional<double> pseudoscalar = {}) {
  detail::require_grade(g, 1, "vector_invariants");
  InvariantSet out;
  out.kind = ConfigKind::vector;
  out.r = g.norm_sq() + (pseudoscalar ? *pseudoscalar * *pseudoscalar : 0.0);
  out.extras["norm"] = std::sqrt(out.r);
  return out;
}

inline constexpr double kInvariantTol = 1e-10;

/// Invariants of a 2-tensor configuration over side 2m.
///   side 6  : D3 is the signed epsilon contraction.
///   side > 6: D3 = 48 sqrt(sum_{|S|=6} Pf(G_S)^2), the value entering the
///             quartet polynomials when rank(G) <= 6; "pf8_sum" records
///             sum_{|S|=8} Pf(G_S)^2, which vanishes exactly in that case.
inline InvariantSet two_tensor_invariants(const AntisymTensor& g) {
  detail::require_grade(g, 2, "two_tensor_invariants");
  InvariantSet out;
  out.kind = ConfigKind::two_tensor;
  out.r = frobenius_r(g);
  out.T4 = trace_T4(g);
  const double disc = 2.0 * out.r * out.r - out.T4;
  if (disc < -kInvariantTol * std::max(1.0, out.r * out.r)) {
    throw Error(ErrorKind::NegativeDiscriminant, "2 r^2 - T4 = " + std::to_string(disc));
  }
  out.extras["2r2_minus_T4"] = disc;
  if (g.side() == 6) {
    out.D3 = epsilon_D3(g);
  } else if (g.side() > 6) {
    out.D3 = 48.0 * std::sqrt(pfaffian_minor_sum(g, 6));
    out.extras["pf8_sum"] = pfaffian_minor_sum(g, 8);
  }
  return out;
}

}  // namespace cliffbloch
