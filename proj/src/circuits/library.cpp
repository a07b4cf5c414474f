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

#include "sptprobe/circuits/library.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "sptprobe/qsim/ops.hpp"

namespace sptprobe {
namespace {

void check_prefix(unsigned L, unsigned l_a) {
  if (l_a < 1 || l_a > L) throw std::invalid_argument("subsystem size must be in 1..L");
}

std::array<Complex, 4> build_decode_table() {
  // (Z_a (x) I) SWAP with local index a | b << 1.
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = 1;
  swap(3, 3) = 1;
  swap(1, 2) = 1;
  swap(2, 1) = 1;
  const Eigen::Matrix4cd z_a = Eigen::Vector4cd(1, -1, 1, -1).asDiagonal();
  const Eigen::Matrix4cd op = z_a * swap;
  const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(op);

  Circuit block(2);
  append_modified_swap_block(block, 0, 1);

  std::array<Complex, 4> table{};
  std::array<bool, 4> seen{};
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector4cd v = solver.eigenvectors().col(k).normalized();
    PureState psi = PureState::from_amplitudes({v(0), v(1), v(2), v(3)}, 1e-10);
    for (const auto& ins : block.instructions()) apply_gate(psi, std::get<Gate>(ins));
    int hit = -1;
    for (int b = 0; b < 4; ++b) {
      if (std::norm(psi[static_cast<std::size_t>(b)]) > 1.0 - 1e-9) hit = b;
    }
    if (hit < 0 || seen[static_cast<std::size_t>(hit)]) {
      throw std::logic_error("modified SWAP block does not map the eigenbasis to basis states");
    }
    seen[static_cast<std::size_t>(hit)] = true;
    const Complex lambda = solver.eigenvalues()(k);
    table[static_cast<std::size_t>(hit)] = {std::round(lambda.real()), std::round(lambda.imag())};
  }
  return table;
}

}  // namespace

Circuit cluster_state_circuit(unsigned L, Boundary boundary) {
  if (L < 2) throw std::invalid_argument("cluster_state_circuit: L must be >= 2");
  if (boundary == Boundary::periodic && L < 3) {
    throw std::invalid_argument("cluster_state_circuit: periodic chain needs L >= 3");
  }
  Circuit c(L, 0, "cluster");
  c.set_figure("cluster preparation");
  for (Qubit q = 0; q < L; ++q) c.add(Gate::h(q));
  for (Qubit q = 0; q + 1 < L; ++q) c.add(Gate::cz(q, q + 1));
  if (boundary == Boundary::periodic) c.add(Gate::cz(L - 1, 0));
  return c;
}

Circuit trivial_state_circuit(unsigned L) {
  if (L < 1) throw std::invalid_argument("trivial_state_circuit: L must be >= 1");
  Circuit c(L, 0, "trivial");
  for (Qubit q = 0; q < L; ++q) c.add(Gate::h(q));
  return c;
}

Circuit state_prep_circuit(StatePrep prep, unsigned L, Boundary boundary) {
  return prep == StatePrep::cluster ? cluster_state_circuit(L, boundary) : trivial_state_circuit(L);
}

std::vector<char> parity_frame(StatePrep prep, unsigned L, Boundary boundary) {
  std::vector<char> frame(L, 'X');
  if (prep == StatePrep::cluster && boundary == Boundary::open && !frame.empty()) {
    frame.front() = 'Y';
    frame.back() = 'Y';
  }
  return frame;
}

void append_frame_rotation(Circuit& c, const std::vector<char>& frame, unsigned offset) {
  for (unsigned i = 0; i < frame.size(); ++i) {
    const Qubit q = i + offset;
    switch (frame[i]) {
      case 'X': c.add(Gate::h(q)); break;
      case 'Y':
        c.add(Gate::sdg(q));
        c.add(Gate::h(q));
        break;
      case 'Z': break;
      default: throw std::invalid_argument("frame letters must be X, Y or Z");
    }
  }
}

void append_swap_block(Circuit& c, Qubit a, Qubit b) {
  c.add(Gate::cnot(a, b));
  c.add(Gate::h(a));
}

Circuit swap_test_circuit(unsigned L, unsigned l_a, Boundary boundary, StatePrep prep) {
  check_prefix(L, l_a);
  const Circuit one = state_prep_circuit(prep, L, boundary);
  Circuit c(2 * L, 0, "swap_test");
  c.set_figure("purity SWAP test");
  c.append(one, 0);
  c.append(one, L);
  const auto frame = parity_frame(prep, L, boundary);
  append_frame_rotation(c, frame, 0);
  append_frame_rotation(c, frame, L);
  for (Qubit i = 0; i < L; ++i) append_swap_block(c, i, L + i);
  c.measure_all();
  return c;
}

Circuit swap_test_circuit(const Circuit& prep) {
  if (prep.n_bits() != 0 || !prep.is_terminal_measurement()) {
    throw std::invalid_argument("swap_test_circuit: preparation must be measurement-free");
  }
  const unsigned L = prep.n_qubits();
  Circuit c(2 * L, 0, "swap_test");
  c.set_figure("purity SWAP test");
  c.append(prep, 0);
  c.append(prep, L);
  for (Qubit i = 0; i < L; ++i) append_swap_block(c, i, L + i);
  c.measure_all();
  return c;
}

Circuit symmetry_resolved_probability_circuit(unsigned L, StatePrep prep, Boundary boundary) {
  Circuit c(L, 0, "resolved_probability");
  c.set_figure("sector probabilities");
  c.append(state_prep_circuit(prep, L, boundary));
  append_frame_rotation(c, parity_frame(prep, L, boundary));
  c.measure_all();
  return c;
}

void append_modified_swap_block(Circuit& c, Qubit a, Qubit b) {
  c.add(Gate::cnot(b, a));
  c.add(Gate::sdg(b));
  c.add(Gate::ch(a, b));
  c.add(Gate::cnot(b, a));
}

Circuit modified_swap_test_circuit(unsigned L, unsigned l_a, StatePrep prep, Boundary boundary) {
  check_prefix(L, l_a);
  const Circuit one = state_prep_circuit(prep, L, boundary);
  Circuit c(2 * L, 0, "modified_swap_test");
  c.set_figure("symmetry-resolved purity");
  c.append(one, 0);
  c.append(one, L);
  const auto frame = parity_frame(prep, L, boundary);
  append_frame_rotation(c, frame, 0);
  append_frame_rotation(c, frame, L);
  for (Qubit i = 0; i < L; ++i) append_modified_swap_block(c, i, L + i);
  c.measure_all();
  return c;
}

const std::array<Complex, 4>& modified_swap_decode_table() {
  static const std::array<Complex, 4> table = build_decode_table();
  return table;
}

const char* to_string(InputState s) {
  switch (s) {
    case InputState::zero: return "0";
    case InputState::one: return "1";
    case InputState::plus: return "+";
    case InputState::minus: return "-";
    case InputState::plus_i: return "+i";
    case InputState::minus_i: return "-i";
  }
  return "?";
}

InputState parse_input_state(std::string_view text) {
  for (InputState s : kAllInputStates) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown input state '" + std::string(text) + "'");
}

std::vector<Gate> input_prep_gates(InputState s) {
  switch (s) {
    case InputState::zero: return {};
    case InputState::one: return {Gate::x(0)};
    case InputState::plus: return {Gate::h(0)};
    case InputState::minus: return {Gate::x(0), Gate::h(0)};
    case InputState::plus_i: return {Gate::h(0), Gate::s(0)};
    case InputState::minus_i: return {Gate::h(0), Gate::sdg(0)};
  }
  return {};
}

std::array<double, 3> bloch_vector(InputState s) {
  switch (s) {
    case InputState::zero: return {0, 0, 1};
    case InputState::one: return {0, 0, -1};
    case InputState::plus: return {1, 0, 0};
    case InputState::minus: return {-1, 0, 0};
    case InputState::plus_i: return {0, 1, 0};
    case InputState::minus_i: return {0, -1, 0};
  }
  return {0, 0, 0};
}

const char* to_string(TeleportKind k) {
  switch (k) {
    case TeleportKind::none: return "none";
    case TeleportKind::symmetric: return "symmetric";
    case TeleportKind::symmetry_breaking: return "symmetry_breaking";
  }
  return "?";
}

TeleportKind parse_teleport_kind(std::string_view text) {
  if (text == "none") return TeleportKind::none;
  if (text == "symmetric") return TeleportKind::symmetric;
  if (text == "symmetry_breaking") return TeleportKind::symmetry_breaking;
  throw std::invalid_argument("unknown teleport kind '" + std::string(text) + "'");
}

Circuit teleportation_circuit(const std::vector<Gate>& input_prep, double alpha, double beta,
                              TeleportKind kind, double angle_sign) {
  Circuit c(5, 4, "teleport");
  c.set_figure("wire teleportation");
  for (const Gate& g : input_prep) {
    for (Qubit q : g.targets()) {
      if (q != 0) throw std::invalid_argument("teleportation_circuit: input prep must act on qubit 0");
    }
    c.add(g);
  }
  c.append(cluster_state_circuit(4, Boundary::open), 1);
  if (kind != TeleportKind::none) {
    const Pauli local = kind == TeleportKind::symmetric ? Pauli::X : Pauli::Y;
    c.add(Gate::pauli_exp(PauliString::single(5, 3, local), angle_sign * alpha));
    c.add(Gate::pauli_exp(
        PauliString::from_sites(5, {{1, Pauli::Z}, {2, Pauli::X}, {3, Pauli::Z}}),
        angle_sign * beta));
  }
  c.add(Gate::cz(0, 1));
  for (Qubit q = 0; q < 4; ++q) c.add(Gate::h(q));
  for (Qubit q = 0; q < 4; ++q) c.measure(q, q);
  return c;
}

unsigned append_basis_measurement(Circuit& c, Qubit q, char basis) {
  switch (basis) {
    case 'X': c.add(Gate::h(q)); break;
    case 'Y':
      c.add(Gate::sdg(q));
      c.add(Gate::h(q));
      break;
    case 'Z': break;
    default: throw std::invalid_argument("basis must be X, Y or Z");
  }
  const unsigned bit = c.n_bits();
  c.set_n_bits(bit + 1);
  c.measure(q, bit);
  return bit;
}

}  // namespace sptprobe
