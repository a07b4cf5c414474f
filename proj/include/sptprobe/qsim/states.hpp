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

#include <Eigen/Dense>

#include "sptprobe/core/types.hpp"

namespace sptprobe {

/// Dense state vector over 2^n basis states. Basis index bit k is site k.
class PureState {
 public:
  /// |0...0> on n qubits.
  explicit PureState(unsigned n_qubits, unsigned max_qubits = kDefaultMaxQubits);

  /// Takes ownership of amplitudes; the length must be a power of two and the
  /// norm 1 within `tol`.
  static PureState from_amplitudes(std::vector<Complex> amplitudes, double tol = kNormTolerance);
  static PureState basis_state(unsigned n_qubits, std::size_t index);

  unsigned n_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> mutable_amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  void normalize();

  /// <this|other>.
  Complex inner(const PureState& other) const;

 private:
  PureState() = default;

  unsigned n_ = 0;
  std::vector<Complex> amps_;
};

/// Dense density matrix, column-major 2^n x 2^n. Row/column index bit k is
/// site k, matching PureState.
class MixedState {
 public:
  explicit MixedState(unsigned n_qubits, unsigned max_qubits = kDefaultMaxMixedQubits);

  static MixedState from_pure(const PureState& psi, unsigned max_qubits = kDefaultMaxMixedQubits);
  /// Checks Hermiticity, unit trace and positivity within `tol`.
  static MixedState from_matrix(Eigen::MatrixXcd rho, double tol = kStateTolerance);
  /// Shape check only; for matrices produced by trace-preserving operations.
  static MixedState adopt(Eigen::MatrixXcd rho);
  static MixedState maximally_mixed(unsigned n_qubits);

  unsigned n_qubits() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(rho_.rows()); }

  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Eigen::MatrixXcd& mutable_matrix() { return rho_; }

  /// The matrix as a 2n-qubit vector (row bits low, column bits high).
  std::span<Complex> as_vector() { return {rho_.data(), static_cast<std::size_t>(rho_.size())}; }
  std::span<const Complex> as_vector() const {
    return {rho_.data(), static_cast<std::size_t>(rho_.size())};
  }

  Complex trace() const { return rho_.trace(); }
  double purity() const;
  double hermiticity_error() const;

  /// Throws std::domain_error when Hermiticity, trace or positivity fail.
  void validate(double tol = kStateTolerance) const;

 private:
  MixedState() = default;

  unsigned n_ = 0;
  Eigen::MatrixXcd rho_;
};

}  // namespace sptprobe
