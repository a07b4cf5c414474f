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

#include "sptprobe/noise/channels.hpp"
#include "sptprobe/noise/readout_bias.hpp"
#include "sptprobe/qsim/gate.hpp"

namespace sptprobe {

struct ChannelSpec {
  ChannelKind kind = ChannelKind::none;
  double p = 0.0;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

/// Builds the channel; std::nullopt for ChannelKind::none.
std::optional<KrausChannel> make_channel(const ChannelSpec& spec);

/// Per-gate-class channels plus readout bias. The 1-qubit channel follows
/// every single-target gate; the multi-qubit channel follows gates with two
/// or more targets. A 1-qubit channel attached to a multi-qubit gate is
/// applied to each target separately. Idle qubits are not touched.
class NoiseModel {
 public:
  /// Noiseless.
  NoiseModel() = default;
  NoiseModel(ChannelSpec one_qubit, ChannelSpec multi_qubit, ReadoutBias readout);

  const ChannelSpec& one_qubit_spec() const { return one_spec_; }
  const ChannelSpec& multi_qubit_spec() const { return multi_spec_; }
  const ReadoutBias& readout() const { return readout_; }

  /// Channel to insert after `g`, or nullptr.
  const KrausChannel* channel_for(const Gate& g) const;

  bool has_gate_noise() const { return one_.has_value() || multi_.has_value(); }
  bool is_noiseless() const { return !has_gate_noise() && readout_.is_zero(); }

 private:
  ChannelSpec one_spec_;
  ChannelSpec multi_spec_;
  ReadoutBias readout_;
  std::optional<KrausChannel> one_;
  std::optional<KrausChannel> multi_;
};

}  // namespace sptprobe
