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

#include "sptprobe/circuits/execute.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "sptprobe/qsim/ops.hpp"
#include "sptprobe/qsim/rng.hpp"

namespace sptprobe {
namespace {

constexpr unsigned kMaxDistributionBits = 24;

template <typename State>
void apply_step(State& state, const Gate& g, const NoiseModel& noise) {
  apply_gate(state, g);
  if constexpr (std::is_same_v<State, MixedState>) {
    const KrausChannel* ch = noise.channel_for(g);
    if (ch == nullptr) return;
    if (ch->arity() == 1) {
      for (Qubit q : g.targets()) {
        const Qubit t[1] = {q};
        apply_kraus_channel(state, *ch, t);
      }
    } else if (ch->arity() == g.arity()) {
      apply_kraus_channel(state, *ch, g.targets());
    } else {
      throw std::invalid_argument("noise channel arity does not fit gate " +
                                  std::string(gate_name(g.kind())));
    }
  }
}

std::size_t first_measurement(const Circuit& c) {
  const auto& ins = c.instructions();
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (!std::holds_alternative<Gate>(ins[i])) return i;
  }
  return ins.size();
}

template <typename State>
State evolve_prefix(const Circuit& c, const NoiseModel& noise, std::size_t end) {
  State state(c.n_qubits());
  for (std::size_t i = 0; i < end; ++i) {
    apply_step(state, std::get<Gate>(c.instructions()[i]), noise);
  }
  return state;
}

// Every gate, with the (deferred) measurements skipped.
template <typename State>
State evolve_all_gates(const Circuit& c, const NoiseModel& noise) {
  State state(c.n_qubits());
  for (const auto& ins : c.instructions()) {
    if (const auto* g = std::get_if<Gate>(&ins)) apply_step(state, *g, noise);
  }
  return state;
}

std::vector<MeasureOp> measurements(const Circuit& c) {
  std::vector<MeasureOp> out;
  for (const auto& ins : c.instructions()) {
    if (const auto* m = std::get_if<MeasureOp>(&ins)) out.push_back(*m);
  }
  return out;
}

std::uint64_t written_mask(const std::vector<MeasureOp>& ms) {
  std::uint64_t mask = 0;
  for (const auto& m : ms) mask |= std::uint64_t{1} << m.bit;
  return mask;
}

std::uint64_t row_for(std::size_t outcome, const std::vector<MeasureOp>& ms) {
  std::uint64_t row = 0;
  for (const auto& m : ms) {
    const std::uint64_t v = (outcome >> m.qubit) & 1;
    row = (row & ~(std::uint64_t{1} << m.bit)) | (v << m.bit);
  }
  return row;
}

std::uint64_t bias_row(std::uint64_t row, std::uint64_t mask, const ReadoutBias& bias, ShotRng& rng) {
  if (bias.is_zero()) return row;
  for (unsigned j = 0; j < 64 && (mask >> j) != 0; ++j) {
    if (((mask >> j) & 1) == 0) continue;
    const int b = static_cast<int>((row >> j) & 1);
    if (biased_bit(b, bias, rng) != b) row ^= std::uint64_t{1} << j;
  }
  return row;
}

std::vector<double> qubit_probabilities(const Circuit& c, const NoiseModel& noise) {
  if (noise.has_gate_noise()) return basis_probabilities(evolve_all_gates<MixedState>(c, noise));
  return basis_probabilities(evolve_all_gates<PureState>(c, noise));
}

ShotRecord sample_terminal(const Circuit& c, const NoiseModel& noise, std::size_t shots,
                           std::uint64_t seed) {
  const std::vector<double> probs = qubit_probabilities(c, noise);
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < probs.size(); ++b) cdf[b] = acc += probs[b];
  const auto ms = measurements(c);
  const std::uint64_t mask = written_mask(ms);

  ShotRecord rec{c.n_bits(), seed, std::vector<std::uint64_t>(shots)};
  if (ms.empty()) return rec;
  for (std::size_t s = 0; s < shots; ++s) {
    ShotRng rng(derive_seed(seed, s));
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t outcome = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
    rec.rows[s] = bias_row(row_for(outcome, ms), mask, noise.readout(), rng);
  }
  return rec;
}

template <typename State>
ShotRecord simulate_shots(const Circuit& c, const NoiseModel& noise, std::size_t shots,
                          std::uint64_t seed) {
  const std::size_t start = first_measurement(c);
  const State prefix = evolve_prefix<State>(c, noise, start);
  const auto& ins = c.instructions();
  ShotRecord rec{c.n_bits(), seed, std::vector<std::uint64_t>(shots)};
  for (std::size_t s = 0; s < shots; ++s) {
    ShotRng rng(derive_seed(seed, s));
    State state = prefix;
    std::uint64_t row = 0;
    for (std::size_t i = start; i < ins.size(); ++i) {
      if (const auto* g = std::get_if<Gate>(&ins[i])) {
        apply_step(state, *g, noise);
      } else if (const auto* m = std::get_if<MeasureOp>(&ins[i])) {
        const int bit = biased_bit(measure_qubit(state, m->qubit, rng).bit, noise.readout(), rng);
        row = (row & ~(std::uint64_t{1} << m->bit)) | (std::uint64_t(bit) << m->bit);
      } else {
        const auto& cg = std::get<ControlledGate>(ins[i]);
        if (static_cast<int>((row >> cg.bit) & 1) == cg.value) apply_step(state, cg.gate, noise);
      }
    }
    rec.rows[s] = row;
  }
  return rec;
}

}  // namespace

ShotRecord execute(const Circuit& c, const NoiseModel& noise, std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("execute: shots must be >= 1");
  c.validate();
  if (c.is_terminal_measurement()) return sample_terminal(c, noise, shots, seed);
  if (noise.has_gate_noise()) return simulate_shots<MixedState>(c, noise, shots, seed);
  return simulate_shots<PureState>(c, noise, shots, seed);
}

ShotRecord execute(const Circuit& c, std::size_t shots, std::uint64_t seed) {
  return execute(c, NoiseModel{}, shots, seed);
}

std::vector<double> exact_distribution(const Circuit& c, const NoiseModel& noise) {
  c.validate();
  if (!c.is_terminal_measurement()) {
    throw std::invalid_argument("exact_distribution: circuit has mid-circuit measurements");
  }
  if (c.n_bits() > kMaxDistributionBits) {
    throw std::length_error("exact_distribution: too many classical bits");
  }
  const std::vector<double> probs = qubit_probabilities(c, noise);
  const auto ms = measurements(c);
  std::vector<double> dist(std::size_t{1} << c.n_bits(), 0.0);
  for (std::size_t b = 0; b < probs.size(); ++b) dist[row_for(b, ms)] += probs[b];
  return apply_readout_bias_joint(dist, noise.readout(), written_mask(ms));
}

PureState final_state(const Circuit& c) {
  c.validate();
  if (!c.is_terminal_measurement()) {
    throw std::invalid_argument("final_state: circuit has mid-circuit measurements");
  }
  return evolve_all_gates<PureState>(c, NoiseModel{});
}

MixedState final_mixed_state(const Circuit& c, const NoiseModel& noise) {
  c.validate();
  if (!c.is_terminal_measurement()) {
    throw std::invalid_argument("final_mixed_state: circuit has mid-circuit measurements");
  }
  return evolve_all_gates<MixedState>(c, noise);
}

}  // namespace sptprobe
