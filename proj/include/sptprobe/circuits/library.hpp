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

#include <array>
#include <string_view>
#include <vector>

#include "sptprobe/circuits/circuit.hpp"
#include "sptprobe/core/types.hpp"

namespace sptprobe {

/// H on every qubit, then CZ(i, i+1); periodic chains add CZ(L-1, 0).
/// Throws std::invalid_argument for L < 2 (L < 3 when periodic).
Circuit cluster_state_circuit(unsigned L, Boundary boundary);
/// |+...+>: the cluster preparation without the CZ layer.
Circuit trivial_state_circuit(unsigned L);
Circuit state_prep_circuit(StatePrep prep, unsigned L, Boundary boundary);

/// Single-site measurement frame of the symmetry parity: 'Y' on the two ends
/// of an open cluster chain, 'X' everywhere else (and everywhere for the
/// periodic chain and the trivial state).
std::vector<char> parity_frame(StatePrep prep, unsigned L, Boundary boundary);

/// Rotates each listed site so that a Z measurement reads the frame Pauli:
/// 'X' -> H, 'Y' -> S^dagger then H, 'Z' -> nothing.
void append_frame_rotation(Circuit& c, const std::vector<char>& frame, unsigned offset = 0);

/// Purity test on two copies: copy 1 on qubits [0, L), copy 2 on [L, 2L),
/// the parity-frame rotation on both, then per pair (i, L+i) CNOT(i -> L+i)
/// and H(i), and every qubit k measured into bit k. Pair i reads (1,1) on
/// the antisymmetric (singlet) subspace. l_a only validates the prefix; the
/// circuit always measures all pairs.
Circuit swap_test_circuit(unsigned L, unsigned l_a, Boundary boundary = Boundary::open,
                          StatePrep prep = StatePrep::cluster);
/// Same block structure for an arbitrary preparation, without rotations.
Circuit swap_test_circuit(const Circuit& prep);

/// Appends CNOT(a -> b), H(a).
void append_swap_block(Circuit& c, Qubit a, Qubit b);

/// Single copy, parity-frame rotation, full measurement. The parity of bits
/// 0..l_a-1 is the eigenvalue of the prefix parity operator.
Circuit symmetry_resolved_probability_circuit(unsigned L, StatePrep prep = StatePrep::cluster,
                                              Boundary boundary = Boundary::open);

/// Appends the block that diagonalizes (Z_a (x) I) SWAP_ab:
/// CNOT(b -> a), S^dagger(b), CH(a -> b), CNOT(b -> a).
void append_modified_swap_block(Circuit& c, Qubit a, Qubit b);

/// Two copies, parity-frame rotation on both, the modified block per pair,
/// full measurement. Pair i decodes to an eigenvalue of (P_i (x) I) SWAP_i.
Circuit modified_swap_test_circuit(unsigned L, unsigned l_a, StatePrep prep = StatePrep::cluster,
                                   Boundary boundary = Boundary::open);

/// Eigenvalue (1, -1, i, -i) of each 2-bit outcome (bit 0 = copy-1 qubit,
/// bit 1 = copy-2 qubit) of the modified block. Built once by running the
/// block on the four eigenvectors of (Z (x) I) SWAP and reading the basis
/// state each one lands on; throws std::logic_error if any lands on a
/// superposition.
const std::array<Complex, 4>& modified_swap_decode_table();

/// The six tomography inputs.
enum class InputState { zero, one, plus, minus, plus_i, minus_i };
inline constexpr std::array<InputState, 6> kAllInputStates = {
    InputState::zero, InputState::one, InputState::plus,
    InputState::minus, InputState::plus_i, InputState::minus_i};

const char* to_string(InputState s);
InputState parse_input_state(std::string_view text);
/// Gates preparing the state from |0> on qubit 0.
std::vector<Gate> input_prep_gates(InputState s);
/// Bloch vector (x, y, z).
std::array<double, 3> bloch_vector(InputState s);

enum class TeleportKind { none, symmetric, symmetry_breaking };
const char* to_string(TeleportKind k);
TeleportKind parse_teleport_kind(std::string_view text);

/// Wire teleportation on 5 qubits. Qubit 0 carries the input (prepared by
/// `input_prep`), qubits 1..4 the 4-site cluster wire. The perturbation is
/// exp(i s alpha X_3) (or Y_3 for symmetry_breaking) followed by
/// exp(i s beta Z_1 X_2 Z_3), with wire sites numbered 1..4 and s =
/// angle_sign. Then CZ(0, 1), H on qubits 0..3 and measurement of qubit k
/// into bit k for k = 0..3. Qubit 4 is the unmeasured output; the Pauli
/// correction Z^{b0} X^{b1} Z^{b2} X^{b3} is left to post-processing.
Circuit teleportation_circuit(const std::vector<Gate>& input_prep, double alpha, double beta,
                              TeleportKind kind, double angle_sign = 1.0);

inline constexpr Qubit kTeleportOutput = 4;

/// Rotates qubit q into `basis` ('X', 'Y', 'Z') and measures it into a new
/// classical bit, returned.
unsigned append_basis_measurement(Circuit& c, Qubit q, char basis);

}  // namespace sptprobe
