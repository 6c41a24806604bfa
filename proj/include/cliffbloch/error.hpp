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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffbloch {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  DegreeMismatch,
  ResourceLimit,
  BadIndex,
  ModeMismatch,
  DimensionMismatch,
  NonUnitTrace,
  GradeOutOfRange,
  GradeMismatch,
  UnsupportedM,
  UnknownName,
  NegativeDiscriminant,
  KindMismatch,
  ComplexRoots,
  FactorizationMismatch,
  NotUnitary,
  BadResolution,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonUnitTrace: return "NonUnitTrace";
    case ErrorKind::GradeOutOfRange: return "GradeOutOfRange";
    case ErrorKind::GradeMismatch: return "GradeMismatch";
    case ErrorKind::UnsupportedM: return "UnsupportedM";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::ComplexRoots: return "ComplexRoots";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::BadResolution: return "BadResolution";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cliffbloch
