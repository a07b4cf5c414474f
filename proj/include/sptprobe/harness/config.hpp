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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sptprobe/circuits/library.hpp"
#include "sptprobe/noise/noise_model.hpp"
#include "sptprobe/symmetry/projector.hpp"

namespace sptprobe::harness {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Experiment { entropy, resolved, teleport, classify, oracle };
const char* to_string(Experiment e);
Experiment parse_experiment(std::string_view text);

/// beta = +alpha or beta = -alpha in the teleportation sweep.
enum class BetaMode { plus, minus };
const char* to_string(BetaMode m);
BetaMode parse_beta_mode(std::string_view text);

struct TeleportSweep {
  std::vector<double> alphas;
  std::vector<BetaMode> modes = {BetaMode::plus, BetaMode::minus};
  TeleportKind kind = TeleportKind::symmetric;
  double angle_sign = 1.0;
  /// 21 points on [0, pi].
  static std::vector<double> default_grid();
};

/// A user-supplied group and its Pauli representation on an l_a-site
/// subsystem, used by the oracle experiment in place of the built-in parity.
struct SymmetrySpec {
  AbelianGroup group = AbelianGroup::trivial();
  unsigned l_a = 0;
  std::vector<PauliString> operators;
  SymmetryAction action() const { return SymmetryAction(group, operators); }
};

/// One entry of the classify-noise list.
struct ClassifyEntry {
  enum class Kind { gate_channel, readout_bias } kind = Kind::gate_channel;
  ChannelSpec channel;
  ReadoutBias bias;
  std::string label() const;
  double parameter() const;
};

/// Built-in classify list: dephasing 0.1, depolarizing 0.1, readout bias 0.07.
std::vector<ClassifyEntry> default_classify_entries();

struct ExperimentConfig {
  Experiment experiment = Experiment::entropy;
  unsigned L = 4;
  Boundary boundary = Boundary::open;
  StatePrep state = StatePrep::cluster;
  std::size_t shots = 8192;
  std::size_t runs = 150;
  std::uint64_t seed = 1;
  NoiseModel noise;
  TeleportSweep teleport{TeleportSweep::default_grid()};
  unsigned max_moment = 4;
  double degeneracy_tol = 1e-8;
  double commutator_tol = 1e-8;
  std::optional<SymmetrySpec> symmetry;
  std::vector<ClassifyEntry> classify = default_classify_entries();

  /// Throws std::invalid_argument on violated invariants (shots < 100, empty
  /// grid, runs == 0, chain too long for the engine, and so on).
  void validate() const;
};

/// Parses a config document. Unknown keys are errors. `base_dir` resolves a
/// noise file reference given as a string.
ExperimentConfig parse_config(const Json& doc, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

/// The effective configuration, fully expanded (every field present).
Json to_json(const ExperimentConfig& cfg);

/// Noise document: {"one_qubit": {...}, "multi_qubit": {...}, "readout": {...}}.
NoiseModel parse_noise(const Json& doc);
NoiseModel load_noise(const std::string& path);
Json to_json(const NoiseModel& noise);

AbelianGroup parse_group(const Json& doc);

}  // namespace sptprobe::harness
