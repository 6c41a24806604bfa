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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cliffbloch/error.hpp"
#include "cliffbloch/linalg.hpp"

namespace cliffbloch {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

/// Strictly increasing list of generator labels. Labels are 1-based
/// (1..side), the way the generators Gamma_1..Gamma_side are numbered.
class MultiIndex {
 public:
  MultiIndex() = default;

  MultiIndex(std::vector<int> labels, int side) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] < 1 || labels_[i] > side) {
        throw Error(ErrorKind::BadIndex, "label " + std::to_string(labels_[i]) +
                                             " outside 1.." + std::to_string(side));
      }
      if (i > 0 && labels_[i] <= labels_[i - 1]) {
        throw Error(ErrorKind::BadIndex, "labels must be strictly increasing");
      }
    }
  }

  MultiIndex(std::initializer_list<int> labels, int side)
      : MultiIndex(std::vector<int>(labels), side) {}

  int grade() const noexcept { return static_cast<int>(labels_.size()); }
  std::span<const int> labels() const noexcept { return labels_; }
  int operator[](std::size_t i) const { return labels_[i]; }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(labels_[i]);
    }
    return out + "]";
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> labels_;
};

/// All k-subsets of {1..side} in lexicographic order.
inline std::vector<MultiIndex> combinations(int side, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > side) return out;
  out.reserve(binomial(side, k));
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(current, side);
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == side - k + pos + 1) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Position of an increasing index in the lexicographic order of combinations().
inline std::size_t combination_rank(std::span<const int> labels, int side) {
  const int k = static_cast<int>(labels.size());
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < labels[static_cast<std::size_t>(i)]; ++v)
      rank += binomial(side - v, k - i - 1);
    prev = labels[static_cast<std::size_t>(i)];
  }
  return rank;
}

/// Sign of the permutation that sorts `labels`, or 0 if a label repeats.
inline int sorting_sign(std::vector<int>& labels) {
  int sign = 1;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    for (std::size_t j = i; j > 0 && labels[j - 1] >= labels[j]; --j) {
      if (labels[j - 1] == labels[j]) return 0;
      std::swap(labels[j - 1], labels[j]);
      sign = -sign;
    }
  }
  return sign;
}

/// Totally antisymmetric real tensor of a given grade over indices 1..side,
/// stored once per strictly increasing index tuple.
class AntisymTensor {
 public:
  AntisymTensor() = default;

  AntisymTensor(int side, int grade)
      : side_(side), grade_(grade), values_(binomial(side, grade), 0.0) {
    if (side < 1 || grade < 0 || grade > side) {
      throw Error(ErrorKind::GradeOutOfRange,
                  "grade " + std::to_string(grade) + " over side " + std::to_string(side));
    }
  }

  /// Grade-1 tensor from a plain vector.
  static AntisymTensor vector(std::span<const double> components) {
    AntisymTensor out(static_cast<int>(components.size()), 1);
    std::copy(components.begin(), components.end(), out.values_.begin());
    return out;
  }

  /// Grade-2 tensor from the upper triangle of an antisymmetric matrix.
  static AntisymTensor from_matrix(const RealMatrix& a) {
    const int n = static_cast<int>(a.dim());
    AntisymTensor out(n, 2);
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.values_[pos++] = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return out;
  }

  int side() const noexcept { return side_; }
  int grade() const noexcept { return grade_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double at(const MultiIndex& idx) const { return values_[slot(idx)]; }
  double& at(const MultiIndex& idx) { return values_[slot(idx)]; }

  /// Component for labels in any order: sign * stored value, 0 on repeats.
  double component(std::span<const int> labels) const {
    std::vector<int> sorted(labels.begin(), labels.end());
    const int sign = sorting_sign(sorted);
    if (sign == 0) return 0.0;
    return sign * values_[combination_rank(sorted, side_)];
  }

  void set(std::initializer_list<int> labels, double value) {
    at(MultiIndex(labels, side_)) = value;
  }

  double get(std::initializer_list<int> labels) const {
    return component(std::vector<int>(labels));
  }

  double norm_sq() const {
    double sum = 0.0;
    for (double v : values_) sum += v * v;
    return sum;
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
  }

  /// Full antisymmetric matrix of a grade-2 tensor.
  RealMatrix to_matrix() const {
    if (grade_ != 2) {
      throw Error(ErrorKind::GradeMismatch, "to_matrix needs grade 2, got " + std::to_string(grade_));
    }
    RealMatrix out(static_cast<std::size_t>(side_));
    std::size_t pos = 0;
    for (int i = 0; i < side_; ++i)
      for (int j = i + 1; j < side_; ++j) {
        const double v = values_[pos++];
        out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
        out(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -v;
      }
    return out;
  }

  AntisymTensor& operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
  }
  friend AntisymTensor operator*(AntisymTensor t, double s) { return t *= s; }

  friend bool operator==(const AntisymTensor&, const AntisymTensor&) = default;

 private:
  std::size_t slot(const MultiIndex& idx) const {
    if (idx.grade() != grade_) {
      throw Error(ErrorKind::BadIndex, "index " + idx.to_string() + " has grade " +
                                           std::to_string(idx.grade()) + ", tensor grade is " +
                                           std::to_string(grade_));
    }
    for (int label : idx.labels())
      if (label > side_) throw Error(ErrorKind::BadIndex, "index " + idx.to_string() + " exceeds side");
    return combination_rank(idx.labels(), side_);
  }

  int side_ = 0;
  int grade_ = 0;
  std::vector<double> values_;
};

}  // namespace cliffbloch
