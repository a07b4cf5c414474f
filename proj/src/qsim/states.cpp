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

#include "sptprobe/qsim/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sptprobe/kernels/kernels.hpp"

namespace sptprobe {
namespace {

void check_width(unsigned n, unsigned max_qubits, const char* what) {
  if (n > max_qubits) {
    throw std::length_error(std::string(what) + ": " + std::to_string(n) +
                            " qubits exceeds the configured maximum of " +
                            std::to_string(max_qubits));
  }
}

}  // namespace

PureState::PureState(unsigned n_qubits, unsigned max_qubits) : n_(n_qubits) {
  check_width(n_qubits, max_qubits, "PureState");
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes, double tol) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw std::invalid_argument("PureState: amplitude count must be a power of two");
  }
  PureState out;
  out.n_ = static_cast<unsigned>(std::countr_zero(amplitudes.size()));
  out.amps_ = std::move(amplitudes);
  if (std::abs(out.norm_squared() - 1.0) > tol) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
  return out;
}

PureState PureState::basis_state(unsigned n_qubits, std::size_t index) {
  PureState out(n_qubits);
  if (index >= out.dimension()) throw std::out_of_range("PureState: basis index out of range");
  out.amps_[0] = 0.0;
  out.amps_[index] = 1.0;
  return out;
}

double PureState::norm_squared() const { return kernels::active_kernels().norm_squared(amps_); }

void PureState::normalize() {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw std::runtime_error("PureState: cannot normalize a zero vector");
  for (Complex& a : amps_) a /= norm;
}

Complex PureState::inner(const PureState& other) const {
  if (other.n_ != n_) throw std::invalid_argument("PureState: qubit count mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

MixedState::MixedState(unsigned n_qubits, unsigned max_qubits) : n_(n_qubits) {
  check_width(n_qubits, max_qubits, "MixedState");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  rho_ = Eigen::MatrixXcd::Zero(dim, dim);
  rho_(0, 0) = 1.0;
}

MixedState MixedState::from_pure(const PureState& psi, unsigned max_qubits) {
  check_width(psi.n_qubits(), max_qubits, "MixedState");
  MixedState out;
  out.n_ = psi.n_qubits();
  const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(),
                                             static_cast<Eigen::Index>(psi.dimension()));
  out.rho_ = v * v.adjoint();
  return out;
}

MixedState MixedState::from_matrix(Eigen::MatrixXcd rho, double tol) {
  MixedState out = adopt(std::move(rho));
  out.validate(tol);
  return out;
}

MixedState MixedState::adopt(Eigen::MatrixXcd rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0 ||
      !std::has_single_bit(static_cast<std::size_t>(rho.rows()))) {
    throw std::invalid_argument("MixedState: matrix must be square with power-of-two size");
  }
  MixedState out;
  out.n_ = static_cast<unsigned>(std::countr_zero(static_cast<std::size_t>(rho.rows())));
  out.rho_ = std::move(rho);
  return out;
}

MixedState MixedState::maximally_mixed(unsigned n_qubits) {
  MixedState out(n_qubits, n_qubits);
  const auto dim = static_cast<Eigen::Index>(out.dimension());
  out.rho_ = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return out;
}

double MixedState::purity() const {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  return rho_.squaredNorm();
}

double MixedState::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

void MixedState::validate(double tol) const {
  if (hermiticity_error() > tol) throw std::domain_error("MixedState: matrix is not Hermitian");
  if (std::abs(trace() - Complex{1.0, 0.0}) > tol) {
    throw std::domain_error("MixedState: trace differs from 1");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw std::domain_error("MixedState: matrix has a negative eigenvalue");
  }
}

}  // namespace sptprobe
