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

#include "sptprobe/core/types.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace sptprobe {

const char* to_string(Boundary b) {
  return b == Boundary::open ? "open" : "periodic";
}

const char* to_string(StatePrep s) {
  return s == StatePrep::cluster ? "cluster" : "trivial";
}

Boundary parse_boundary(std::string_view text) {
  if (text == "open") return Boundary::open;
  if (text == "periodic") return Boundary::periodic;
  throw std::invalid_argument("unknown boundary '" + std::string(text) + "'");
}

StatePrep parse_state_prep(std::string_view text) {
  if (text == "cluster") return StatePrep::cluster;
  if (text == "trivial") return StatePrep::trivial;
  throw std::invalid_argument("unknown state preparation '" + std::string(text) + "'");
}

}  // namespace sptprobe
