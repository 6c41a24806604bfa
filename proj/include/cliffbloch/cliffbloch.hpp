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

#include "cliffbloch/antisym_tensor.hpp"
#include "cliffbloch/clifford_basis.hpp"
#include "cliffbloch/domains.hpp"
#include "cliffbloch/error.hpp"
#include "cliffbloch/figures.hpp"
#include "cliffbloch/invariants.hpp"
#include "cliffbloch/linalg.hpp"
#include "cliffbloch/spectra.hpp"
#include "cliffbloch/state_coords.hpp"
#include "cliffbloch/symmetry.hpp"
