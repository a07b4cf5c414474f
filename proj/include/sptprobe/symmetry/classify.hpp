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

#include <optional>
#include <vector>

#include "sptprobe/qsim/kraus.hpp"
#include "sptprobe/qsim/pauli_string.hpp"
#include "sptprobe/qsim/states.hpp"

namespace sptprobe {

inline constexpr double kCommutatorTolerance = 1e-8;

/// max-entry norm of T rho - rho T. Throws std::invalid_argument when t is not
/// Hermitian or acts on a different number of sites than rho.
double symmetry_commutator_norm(const MixedState& rho, const PauliString& t);

struct ChannelApplication {
  KrausChannel channel;
  std::vector<Qubit> targets;
};

/// Resource state plus the subsystem and sector-exchange operators T_A used
/// to judge a channel. t_ops act on subsystem.size() sites, in the order of
/// the (sorted) subsystem sites.
struct ClassificationContext {
  MixedState rho;
  std::vector<Qubit> subsystem;
  std::vector<PauliString> t_ops;
  /// Optional sector operator on A; its expectation after the channel is
  /// reported as the sector-probability gap.
  std::optional<PauliString> sector_operator;
  double tolerance = kCommutatorTolerance;
};

enum class NoiseClass { preserving, breaking };

const char* to_string(NoiseClass c);

struct Classification {
  NoiseClass verdict = NoiseClass::preserving;
  /// max over T_A of the commutator norm after the channel.
  double witness = 0.0;
  std::optional<double> sector_gap;
};

/// Applies the channel list to the full state in order, traces down to A and
/// tests [T_A, rho'_A] = 0. Throws std::domain_error if the input rho_A
/// already fails the test.
Classification classify_channel(const std::vector<ChannelApplication>& applications,
                                const ClassificationContext& ctx);

/// Convenience form: a 1-qubit channel goes on every qubit of the state, a
/// channel as wide as the state goes on all of it.
Classification classify_channel(const KrausChannel& channel, const ClassificationContext& ctx);

}  // namespace sptprobe
