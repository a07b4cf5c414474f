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

#include "sptprobe/qsim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sptprobe/kernels/kernels.hpp"

namespace sptprobe {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CH: return "CH";
    case GateKind::PauliExp: return "PEXP";
  }
  return "?";
}

unsigned fixed_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CZ:
    case GateKind::CNOT:
    case GateKind::CH:
      return 2;
    case GateKind::PauliExp:
      return 0;
    default:
      return 1;
  }
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -1i, 1i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Gate::Gate(GateKind kind, std::vector<Qubit> targets) : kind_(kind), targets_(std::move(targets)) {
  std::vector<Qubit> sorted = targets_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("Gate: repeated target qubit");
  }
}

Gate Gate::fixed(GateKind kind, std::vector<Qubit> targets) {
  if (kind == GateKind::PauliExp) throw std::invalid_argument("Gate::fixed: use pauli_exp");
  if (targets.size() != fixed_arity(kind)) {
    throw std::invalid_argument("Gate: wrong number of targets for " +
                                std::string(gate_name(kind)));
  }
  return Gate(kind, std::move(targets));
}

Gate Gate::pauli_exp(PauliString p, double theta) {
  if (!p.is_hermitian()) throw std::invalid_argument("Gate: PauliExp needs a Hermitian string");
  Gate g(GateKind::PauliExp, p.support());
  g.pauli_ = std::move(p);
  g.angle_ = theta;
  return g;
}

Eigen::MatrixXcd Gate::matrix() const {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::MatrixXcd m;
  switch (kind_) {
    case GateKind::H:
      m.resize(2, 2);
      m << r, r, r, -r;
      return m;
    case GateKind::X: return pauli_matrix(Pauli::X);
    case GateKind::Y: return pauli_matrix(Pauli::Y);
    case GateKind::Z: return pauli_matrix(Pauli::Z);
    case GateKind::S:
      m.resize(2, 2);
      m << 1, 0, 0, 1i;
      return m;
    case GateKind::Sdg:
      m.resize(2, 2);
      m << 1, 0, 0, -1i;
      return m;
    case GateKind::CZ:
      m = Eigen::MatrixXcd::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    case GateKind::CNOT:
      // local index = control | target << 1
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(2, 2) = 1;
      m(3, 1) = 1;
      m(1, 3) = 1;
      return m;
    case GateKind::CH:
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(2, 2) = 1;
      m(1, 1) = r;
      m(1, 3) = r;
      m(3, 1) = r;
      m(3, 3) = -r;
      return m;
    case GateKind::PauliExp: {
      const auto dim = static_cast<Eigen::Index>(std::size_t{1} << targets_.size());
      m = Eigen::MatrixXcd::Identity(dim, dim);
      const PauliString local = pauli_.restricted(targets_);
      for (Eigen::Index c = 0; c < dim; ++c) {
        std::span<Complex> column(m.col(c).data(), static_cast<std::size_t>(dim));
        kernels::scalar_kernels().apply_pauli_rotation(column, local.mask(), angle_);
      }
      return m;
    }
  }
  throw std::logic_error("Gate::matrix: unknown kind");
}

}  // namespace sptprobe
