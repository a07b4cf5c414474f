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

#include <string>
#include <string_view>

#include "sptprobe/circuits/circuit.hpp"

namespace sptprobe {

// Line-oriented circuit text, one instruction per line:
//
//   # comment
//   name swap_test
//   figure purity SWAP test
//   qubits 4
//   bits 4
//   H 0
//   CNOT 0 2                      control first
//   PEXP 0.59999999999999998 +ZXZ 1 2 3
//   MEASURE 0 0                   qubit, classical bit
//   X 4 if c2=1                   gate conditioned on a classical bit
//
// Opcodes: H X Y Z S SDG CZ CNOT CH PEXP MEASURE. PEXP takes the angle
// (radians, exp(+i angle P)), the signed Pauli letters and one target per
// letter. Header lines come before the first instruction; "name" and
// "figure" are optional.

std::string to_text(const Circuit& c);

/// Throws std::invalid_argument with the 1-based line number on any error.
Circuit parse_circuit(std::string_view text);

}  // namespace sptprobe
