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
 * @file clifford_basis.hpp
 * @brief Hermitian matrix representation of the Clifford algebra Cl_{2m}.
 *
 * Generators are built by the Pauli iteration
 *
 *   Gamma^{m+1} = { Gamma^m_1 (x) s1, ..., Gamma^m_{2m} (x) s1, I (x) s2, I (x) s3 }
 *
 * starting from {s1, s2} at m = 1 (the new Pauli factor goes on the right).
 * A graded basis element for the increasing labels i1 < ... < ik is
 *
 *   E_{i1..ik} = i^{k(k-1)/2} Gamma_{i1} ... Gamma_{ik},
 *
 * where the phase makes every element hermitian and E^2 = I. With this
 * normalization trace(E_A E_B) = 2^m delta_AB.
 *
 * Extended mode appends the chirality element Gamma_{2m+1} to the generators
 * and keeps grades 0..m of the 2m+1 generators, which again gives 4^m
 * elements.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliffbloch/antisym_tensor.hpp"
#include "cliffbloch/error.hpp"
#include "cliffbloch/linalg.hpp"

namespace cliffbloch {

inline constexpr int kMaxQubits = 6;
inline constexpr int kMaxVerifiedQubits = 5;

enum class BasisMode { standard, extended };

constexpr std::string_view to_string(BasisMode mode) {
  return mode == BasisMode::standard ? "standard" : "extended";
}

inline BasisMode parse_basis_mode(std::string_view text) {
  if (text == "standard") return BasisMode::standard;
  if (text == "extended") return BasisMode::extended;
  throw Error(ErrorKind::ParseError, "unknown basis mode '" + std::string(text) + "'");
}

namespace pauli {

inline ComplexMatrix identity() { return ComplexMatrix::identity(2); }
inline ComplexMatrix sigma1() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix sigma2() {
  return ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}
inline ComplexMatrix sigma3() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace pauli

inline void check_qubits(int m) {
  if (m < 1) throw Error(ErrorKind::ResourceLimit, "m must be >= 1");
  if (m > kMaxQubits) {
    throw Error(ErrorKind::ResourceLimit,
                "m = " + std::to_string(m) + " exceeds the supported maximum " +
                    std::to_string(kMaxQubits));
  }
}

inline std::vector<ComplexMatrix> generate_gammas(int m) {
  check_qubits(m);
  std::vector<ComplexMatrix> gammas{pauli::sigma1(), pauli::sigma2()};
  for (int level = 1; level < m; ++level) {
    const ComplexMatrix eye = ComplexMatrix::identity(gammas.front().dim());
    std::vector<ComplexMatrix> next;
    next.reserve(gammas.size() + 2);
    for (const auto& g : gammas) next.push_back(kron(g, pauli::sigma1()));
    next.push_back(kron(eye, pauli::sigma2()));
    next.push_back(kron(eye, pauli::sigma3()));
    gammas = std::move(next);
  }
  return gammas;
}

/// (-i)^m Gamma_1 ... Gamma_{2m}.
inline ComplexMatrix chirality(std::span<const ComplexMatrix> gammas) {
  const int m = static_cast<int>(gammas.size()) / 2;
  ComplexMatrix product = ComplexMatrix::identity(gammas.front().dim());
  for (const auto& g : gammas) product = product * g;
  Complex phase(1.0);
  for (int i = 0; i < m; ++i) phase *= Complex(0.0, -1.0);
  return product * phase;
}

inline ComplexMatrix chirality(int m) { return chirality(generate_gammas(m)); }

inline std::vector<ComplexMatrix> extended_gammas(int m) {
  auto gammas = generate_gammas(m);
  gammas.push_back(chirality(gammas));
  return gammas;
}

/// i^{k(k-1)/2}: 1, 1, i, -i, -1, -1, -i, i, then repeats.
inline Complex hermiticity_phase(int k) {
  switch ((k * (k - 1) / 2) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// Phased ordered product of the generators named by idx (1-based labels).
inline ComplexMatrix product_element(std::span<const ComplexMatrix> gammas, const MultiIndex& idx) {
  ComplexMatrix product = ComplexMatrix::identity(gammas.front().dim());
  for (int label : idx.labels()) {
    if (label < 1 || label > static_cast<int>(gammas.size())) {
      throw Error(ErrorKind::BadIndex, "label " + std::to_string(label) + " has no generator");
    }
    product = product * gammas[static_cast<std::size_t>(label - 1)];
  }
  return product * hermiticity_phase(idx.grade());
}

inline ComplexMatrix basis_element(int m, const MultiIndex& idx) {
  const auto gammas = generate_gammas(m);
  if (idx.grade() > 2 * m) throw Error(ErrorKind::BadIndex, "grade exceeds 2m");
  return product_element(gammas, idx);
}

/// tr(A B) in O(n^2).
inline Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex sum{};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum += a(i, j) * b(j, i);
  return sum;
}

enum class Verification { none, sampled, exhaustive };

struct AlgebraReport {
  int m = 0;
  BasisMode mode = BasisMode::standard;
  std::size_t generator_count = 0;
  std::size_t element_count = 0;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  double anticommutator_residual = 0.0;  // max |{G_i, G_j} - 2 delta_ij I|
  double hermiticity_residual = 0.0;     // max over elements of |E - E^dagger|
  double trace_residual = 0.0;           // max |tr E| for grade >= 1
  double orthogonality_residual = 0.0;   // max |tr(E_A E_B) - 2^m delta_AB|
  double chirality_residual = 0.0;       // max |{G_i, chirality}| and |chirality^2 - I|

  double max_residual() const {
    return std::max({anticommutator_residual, hermiticity_residual, trace_residual,
                     orthogonality_residual, chirality_residual});
  }
};

class CliffordBasis;
AlgebraReport verify_algebra(const CliffordBasis& basis, Verification level);

class CliffordBasis {
 public:
  CliffordBasis(int m, BasisMode mode) : m_(m), mode_(mode) {
    check_qubits(m);
    gammas_ = mode == BasisMode::standard ? generate_gammas(m) : extended_gammas(m);
    chirality_ = mode == BasisMode::standard ? cliffbloch::chirality(gammas_) : gammas_.back();
    by_grade_.resize(static_cast<std::size_t>(max_grade()) + 1);
    by_grade_[0].push_back(ComplexMatrix::identity(dim()));
    // Each unphased product extends its parent (same labels minus the last)
    // by one sparse generator product.
    std::vector<ComplexMatrix> raw_prev{ComplexMatrix::identity(dim())};
    for (int k = 1; k <= max_grade(); ++k) {
      std::vector<ComplexMatrix> raw;
      const auto combos = combinations(side(), k);
      raw.reserve(combos.size());
      for (const auto& idx : combos) {
        std::vector<int> head(idx.labels().begin(), idx.labels().end() - 1);
        const std::size_t parent = combination_rank(head, side());
        raw.push_back(raw_prev[parent] * gammas_[static_cast<std::size_t>(idx.labels().back() - 1)]);
      }
      by_grade_[static_cast<std::size_t>(k)].reserve(raw.size());
      const Complex phase = hermiticity_phase(k);
      for (const auto& r : raw) by_grade_[static_cast<std::size_t>(k)].push_back(r * phase);
      raw_prev = std::move(raw);
    }
  }

  int m() const noexcept { return m_; }
  BasisMode mode() const noexcept { return mode_; }
  std::size_t dim() const noexcept { return std::size_t{1} << m_; }
  int side() const noexcept { return mode_ == BasisMode::standard ? 2 * m_ : 2 * m_ + 1; }
  int max_grade() const noexcept { return mode_ == BasisMode::standard ? 2 * m_ : m_; }

  std::span<const ComplexMatrix> gammas() const noexcept { return gammas_; }
  const ComplexMatrix& chirality() const noexcept { return chirality_; }

  /// Elements of grade k in the lexicographic order of combinations(side, k).
  std::span<const ComplexMatrix> grade_elements(int k) const {
    if (k < 0 || k > max_grade()) {
      throw Error(ErrorKind::GradeOutOfRange, "grade " + std::to_string(k) + " not in basis");
    }
    return by_grade_[static_cast<std::size_t>(k)];
  }

  const ComplexMatrix& element(const MultiIndex& idx) const {
    const auto elems = grade_elements(idx.grade());
    for (int label : idx.labels())
      if (label > side()) throw Error(ErrorKind::BadIndex, "index " + idx.to_string() + " exceeds side");
    return elems[combination_rank(idx.labels(), side())];
  }

  std::size_t element_count() const {
    std::size_t count = 0;
    for (const auto& g : by_grade_) count += g.size();
    return count;
  }

  const std::optional<AlgebraReport>& certificate() const noexcept { return certificate_; }

  /// Copy with one element replaced; the certificate is dropped. Used to
  /// exercise verify_algebra on deliberately broken input.
  CliffordBasis with_replaced_element(const MultiIndex& idx, ComplexMatrix replacement) const {
    CliffordBasis copy = *this;
    const auto rank = combination_rank(idx.labels(), side());
    copy.by_grade_.at(static_cast<std::size_t>(idx.grade())).at(rank) = std::move(replacement);
    copy.certificate_.reset();
    return copy;
  }

 private:
  friend CliffordBasis full_basis(int m, BasisMode mode, std::optional<Verification> level);

  int m_;
  BasisMode mode_;
  std::vector<ComplexMatrix> gammas_;
  ComplexMatrix chirality_;
  std::vector<std::vector<ComplexMatrix>> by_grade_;
  std::optional<AlgebraReport> certificate_;
};

inline AlgebraReport verify_algebra(const CliffordBasis& basis, Verification level) {
  AlgebraReport report;
  report.m = basis.m();
  report.mode = basis.mode();
  report.generator_count = basis.gammas().size();
  report.element_count = basis.element_count();

  const auto gammas = basis.gammas();
  const std::size_t n = basis.dim();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      ComplexMatrix anti = gammas[i] * gammas[j] + gammas[j] * gammas[i];
      if (i == j) anti.add_scaled(Complex(-2.0), eye);
      report.anticommutator_residual = std::max(report.anticommutator_residual, anti.max_abs());
    }
  }
  const ComplexMatrix& chir = basis.chirality();
  report.chirality_residual = (chir * chir - eye).max_abs();
  for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(basis.m()); ++i) {
    const ComplexMatrix anti = gammas[i] * chir + chir * gammas[i];
    report.chirality_residual = std::max(report.chirality_residual, anti.max_abs());
  }

  std::vector<const ComplexMatrix*> flat;
  for (int k = 0; k <= basis.max_grade(); ++k) {
    for (const auto& e : basis.grade_elements(k)) {
      flat.push_back(&e);
      report.hermiticity_residual = std::max(report.hermiticity_residual, hermiticity_residual(e));
      if (k >= 1) report.trace_residual = std::max(report.trace_residual, std::abs(e.trace()));
    }
  }

  const double norm = static_cast<double>(n);
  auto check_pair = [&](std::size_t a, std::size_t b) {
    const Complex t = trace_of_product(*flat[a], *flat[b]);
    const double expected = a == b ? norm : 0.0;
    report.orthogonality_residual = std::max(report.orthogonality_residual, std::abs(t - expected));
    ++report.pairs_checked;
  };

  if (level == Verification::exhaustive) {
    report.exhaustive = true;
    for (std::size_t a = 0; a < flat.size(); ++a)
      for (std::size_t b = 0; b < flat.size(); ++b) check_pair(a, b);
  } else if (level == Verification::sampled) {
    std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(basis.m()));
    std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
    for (int s = 0; s < 200; ++s) {
      const std::size_t a = pick(rng);
      // Every fourth sample is a diagonal pair so the norm is also exercised.
      const std::size_t b = (s % 4 == 0) ? a : pick(rng);
      check_pair(a, b);
    }
  }
  return report;
}

/// Full graded basis. Default verification: exhaustive for m <= 4, 200
/// random pairs for m = 5, none for m = 6.
inline CliffordBasis full_basis(int m, BasisMode mode = BasisMode::standard,
                                std::optional<Verification> level = std::nullopt) {
  check_qubits(m);
  const Verification chosen =
      level.value_or(m <= 4 ? Verification::exhaustive
                            : (m <= kMaxVerifiedQubits ? Verification::sampled : Verification::none));
  if (chosen != Verification::none && m > kMaxVerifiedQubits) {
    throw Error(ErrorKind::ResourceLimit, "pairwise verification is limited to m <= 5");
  }
  CliffordBasis basis(m, mode);
  if (chosen != Verification::none) basis.certificate_ = verify_algebra(basis, chosen);
  return basis;
}

}  // namespace cliffbloch
