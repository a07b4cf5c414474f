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
#include <vector>

#include <Eigen/Dense>

#include "sptprobe/qsim/pauli_string.hpp"

namespace sptprobe {

/// CH is the controlled Hadamard needed by the symmetry-resolved SWAP block.
/// PauliExp(p, theta) is exp(+i theta p).
enum class GateKind { H, X, Y, Z, S, Sdg, CZ, CNOT, CH, PauliExp };

std::string_view gate_name(GateKind kind);

class Gate {
 public:
  static Gate h(Qubit q) { return Gate(GateKind::H, {q}); }
  static Gate x(Qubit q) { return Gate(GateKind::X, {q}); }
  static Gate y(Qubit q) { return Gate(GateKind::Y, {q}); }
  static Gate z(Qubit q) { return Gate(GateKind::Z, {q}); }
  static Gate s(Qubit q) { return Gate(GateKind::S, {q}); }
  static Gate sdg(Qubit q) { return Gate(GateKind::Sdg, {q}); }
  static Gate cz(Qubit a, Qubit b) { return Gate(GateKind::CZ, {a, b}); }
  static Gate cnot(Qubit control, Qubit target) { return Gate(GateKind::CNOT, {control, target}); }
  static Gate ch(Qubit control, Qubit target) { return Gate(GateKind::CH, {control, target}); }
  /// exp(+i theta p); p must be Hermitian. Targets are p's support.
  static Gate pauli_exp(PauliString p, double theta);
  /// Fixed-kind constructor used by parsers; not valid for PauliExp.
  static Gate fixed(GateKind kind, std::vector<Qubit> targets);

  GateKind kind() const { return kind_; }
  const std::vector<Qubit>& targets() const { return targets_; }
  unsigned arity() const { return static_cast<unsigned>(targets_.size()); }
  const PauliString& pauli() const { return pauli_; }
  double angle() const { return angle_; }

  /// Unitary on the gate's targets, local index bit j = targets()[j].
  Eigen::MatrixXcd matrix() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::vector<Qubit> targets);

  GateKind kind_ = GateKind::H;
  std::vector<Qubit> targets_;
  PauliString pauli_;
  double angle_ = 0.0;
};

/// Expected number of targets for fixed gates, 0 for PauliExp.
unsigned fixed_arity(GateKind kind);

/// 2x2 matrices of the single-qubit Paulis.
Eigen::Matrix2cd pauli_matrix(Pauli p);

}  // namespace sptprobe
