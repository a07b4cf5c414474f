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

#include <string_view>

#include "sptprobe/qsim/kraus.hpp"

namespace sptprobe {

/// K1 = sqrt(1-p) I, K2 = sqrt(p) Z. Throws std::invalid_argument unless
/// 0 <= p <= 1.
KrausChannel dephasing_channel(double p);

/// The "depolarizing" pair used for the noisy cluster simulations:
///   K1 = [(1 + sqrt(1-p)) I - (1 - sqrt(1-p)) Z] / 2 = diag(sqrt(1-p), 1)
///   K2 = sqrt(p) sigma^-,  sigma^- = (X - iY)/2 = |1><0|.
/// Despite the name this is amplitude damping from |0> into |1>: completeness
/// only holds with sigma^- taken literally, so p = 1 sends |0><0| to |1><1|
/// and leaves |1><1| fixed.
KrausChannel lowering_depolarizing_channel(double p);

/// Standard amplitude damping toward |0>: K0 = diag(1, sqrt(1-g)),
/// K1 = sqrt(g) |0><1|.
KrausChannel amplitude_damping_channel(double gamma);

/// Readout bias as a quantum channel ahead of a measurement in `basis`
/// ('X', 'Y' or 'Z'): amplitude damping with gamma = 2 eps in the frame where
/// that basis is measured. Throws std::invalid_argument for eps outside
/// [0, 0.5) or an unknown basis.
KrausChannel readout_bias_channel(double eps, char basis);

enum class ChannelKind { none, dephasing, lowering_depolarizing, amplitude_damping };

const char* to_string(ChannelKind kind);
/// Accepts "none", "dephasing", "depolarizing", "amplitude_damping".
ChannelKind parse_channel_kind(std::string_view text);

}  // namespace sptprobe
