// Copyright 2026 The sptprobe Authors
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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sptprobe {

using Complex = std::complex<double>;

/// Qubit ordering: site k (0-based) is bit k of a basis-state index, so site 1
/// of a chain is the least significant bit.
using Qubit = unsigned;

inline constexpr unsigned kDefaultMaxQubits = 16;
inline constexpr unsigned kDefaultMaxMixedQubits = 10;

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;

enum class Boundary { open, periodic };

/// Which resource state a library circuit prepares.
enum class StatePrep { cluster, trivial };

/// Sample mean with its standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

const char* to_string(Boundary b);
const char* to_string(StatePrep s);
Boundary parse_boundary(std::string_view text);
StatePrep parse_state_prep(std::string_view text);

}  // namespace sptprobe
