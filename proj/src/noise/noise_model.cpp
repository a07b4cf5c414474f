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

#include "sptprobe/noise/noise_model.hpp"

namespace sptprobe {

std::optional<KrausChannel> make_channel(const ChannelSpec& spec) {
  switch (spec.kind) {
    case ChannelKind::none: return std::nullopt;
    case ChannelKind::dephasing: return dephasing_channel(spec.p);
    case ChannelKind::lowering_depolarizing: return lowering_depolarizing_channel(spec.p);
    case ChannelKind::amplitude_damping: return amplitude_damping_channel(spec.p);
  }
  return std::nullopt;
}

NoiseModel::NoiseModel(ChannelSpec one_qubit, ChannelSpec multi_qubit, ReadoutBias readout)
    : one_spec_(one_qubit), multi_spec_(multi_qubit), readout_(readout) {
  readout_.validate();
  one_ = make_channel(one_spec_);
  multi_ = make_channel(multi_spec_);
}

const KrausChannel* NoiseModel::channel_for(const Gate& g) const {
  const auto& ch = g.arity() == 1 ? one_ : multi_;
  return ch ? &*ch : nullptr;
}

}  // namespace sptprobe
