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

#include <cstdint>
#include <vector>

#include "sptprobe/circuits/circuit.hpp"
#include "sptprobe/noise/noise_model.hpp"
#include "sptprobe/qsim/states.hpp"

namespace sptprobe {

/// Runs `shots` repetitions. Shot s draws from its own stream seeded by
/// derive_seed(seed, s), so records are reproducible and independent of how
/// shots are scheduled.
///
/// Without gate noise the state is a PureState; with gate noise it is a
/// MixedState and the model's channel follows every matching gate. Readout
/// bias is applied to each recorded bit. Circuits whose measurements are all
/// terminal are evolved once and sampled from the exact outcome
/// distribution; others are simulated shot by shot.
///
/// Throws std::invalid_argument for shots == 0 and std::length_error when
/// the circuit is wider than the engine allows.
ShotRecord execute(const Circuit& c, const NoiseModel& noise, std::size_t shots, std::uint64_t seed);
ShotRecord execute(const Circuit& c, std::size_t shots, std::uint64_t seed);

/// Exact distribution over the 2^n_bits classical records of a
/// terminal-measurement circuit, readout bias included. Unwritten bits are 0.
/// Throws std::invalid_argument for mid-circuit measurements.
std::vector<double> exact_distribution(const Circuit& c, const NoiseModel& noise = {});

/// State of a terminal-measurement circuit after every gate, with the
/// measurements deferred.
PureState final_state(const Circuit& c);
MixedState final_mixed_state(const Circuit& c, const NoiseModel& noise = {});

}  // namespace sptprobe
