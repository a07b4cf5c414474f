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

#include <span>
#include <vector>

#include "sptprobe/qsim/gate.hpp"
#include "sptprobe/qsim/kraus.hpp"
#include "sptprobe/qsim/pauli_string.hpp"
#include "sptprobe/qsim/rng.hpp"
#include "sptprobe/qsim/states.hpp"

namespace sptprobe {

// State updates are in place. Targets are validated against the state width:
// out-of-range throws std::out_of_range, repeats throw std::invalid_argument.

void apply_gate(PureState& psi, const Gate& g);
void apply_gate(MixedState& rho, const Gate& g);

/// Dense unitary on `targets` (local index bit j = targets[j]).
void apply_unitary(PureState& psi, std::span<const Qubit> targets, const Eigen::MatrixXcd& u);
void apply_unitary(MixedState& rho, std::span<const Qubit> targets, const Eigen::MatrixXcd& u);

/// exp(+i theta p). Throws std::invalid_argument if p is not Hermitian.
void apply_pauli_exponential(PureState& psi, const PauliString& p, double theta);
void apply_pauli_exponential(MixedState& rho, const PauliString& p, double theta);

/// rho -> sum K rho K^dagger with the channel acting on `targets`.
void apply_kraus_channel(MixedState& rho, const KrausChannel& ch, std::span<const Qubit> targets);

struct Measurement {
  int bit = 0;
  /// Probability of the observed outcome before collapse.
  double probability = 0.0;
};

/// Z-basis Born sampling followed by collapse and renormalization.
/// Throws std::runtime_error on a zero-norm state.
Measurement measure_qubit(PureState& psi, Qubit q, ShotRng& rng);
Measurement measure_qubit(MixedState& rho, Qubit q, ShotRng& rng);

/// Projects onto `bit` and renormalizes; returns the pre-collapse probability.
/// Throws std::runtime_error when that outcome has zero probability.
double collapse(PureState& psi, Qubit q, int bit);
double collapse(MixedState& rho, Qubit q, int bit);

double probability_one(const PureState& psi, Qubit q);
double probability_one(const MixedState& rho, Qubit q);

/// |<b|psi>|^2 or <b|rho|b> for every basis index b.
std::vector<double> basis_probabilities(const PureState& psi);
std::vector<double> basis_probabilities(const MixedState& rho);

/// m-fold tensor power. Copy j occupies qubits [j*n, (j+1)*n).
PureState tensor_copies(const PureState& psi, unsigned m, unsigned max_qubits = kDefaultMaxQubits);
MixedState tensor_copies(const MixedState& rho, unsigned m,
                         unsigned max_qubits = kDefaultMaxMixedQubits);
/// psi_low (x) psi_high, psi_low on the low qubits.
PureState tensor_product(const PureState& low, const PureState& high,
                         unsigned max_qubits = kDefaultMaxQubits);

/// <psi|p|psi> or Tr[rho p]. Real for Hermitian p; the imaginary part is kept
/// as a diagnostic.
Complex pauli_expectation(const PureState& psi, const PauliString& p);
Complex pauli_expectation(const MixedState& rho, const PauliString& p);

/// Reduced state on `keep`. Kept sites are sorted ascending and kept site
/// keep[j] becomes bit j of the result.
MixedState partial_trace(const PureState& psi, std::vector<Qubit> keep);
MixedState partial_trace(const MixedState& rho, std::vector<Qubit> keep);

}  // namespace sptprobe
