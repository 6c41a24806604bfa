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

#include <ostream>

namespace cliffbloch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInadmissible = 2;

/// Runs one command line. Results go to `out` (or --output), diagnostics
/// to `err`. Returns 0 on success, 2 when a validated state is not
/// admissible, 1 on any error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliffbloch::cli
