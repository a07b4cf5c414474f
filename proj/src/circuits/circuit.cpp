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

#include "sptprobe/circuits/circuit.hpp"

#include <stdexcept>

namespace sptprobe {

Gate shift_gate(const Gate& g, unsigned offset) {
  if (offset == 0) return g;
  if (g.kind() == GateKind::PauliExp) {
    const PauliString& p = g.pauli();
    const unsigned width = p.n_sites() + offset;
    if (width > PauliString::kMaxSites) throw std::out_of_range("shift_gate: too many sites");
    return Gate::pauli_exp(p.embedded(width, offset), g.angle());
  }
  std::vector<Qubit> t = g.targets();
  for (Qubit& q : t) q += offset;
  return Gate::fixed(g.kind(), std::move(t));
}

Circuit::Circuit(unsigned n_qubits, unsigned n_bits, std::string name)
    : n_qubits_(n_qubits), name_(std::move(name)) {
  set_n_bits(n_bits);
}

void Circuit::set_n_bits(unsigned n) {
  if (n > kMaxBits) throw std::invalid_argument("Circuit: more than 64 classical bits");
  if (n < n_bits_ && (written_ >> n) != 0) {
    throw std::invalid_argument("Circuit: cannot drop a bit that is written");
  }
  n_bits_ = n;
}

void Circuit::check_gate(const Gate& g) const {
  for (Qubit q : g.targets()) {
    if (q >= n_qubits_) {
      throw std::invalid_argument("Circuit: gate target " + std::to_string(q) + " out of range");
    }
  }
}

Gate Circuit::normalized(Gate g) const {
  check_gate(g);
  if (g.kind() != GateKind::PauliExp || g.pauli().n_sites() == n_qubits_) return g;
  // Store Pauli exponentials at circuit width so equal circuits compare equal.
  PauliString full(n_qubits_);
  for (Qubit q : g.targets()) full.set(q, g.pauli().at(q));
  return Gate::pauli_exp(full.times_phase(g.pauli().phase_exponent()), g.angle());
}

Circuit& Circuit::add(Gate g) {
  instrs_.emplace_back(normalized(std::move(g)));
  return *this;
}

Circuit& Circuit::measure(Qubit q, unsigned bit) {
  if (q >= n_qubits_) throw std::invalid_argument("Circuit: measured qubit out of range");
  if (bit >= n_bits_) throw std::invalid_argument("Circuit: classical bit out of range");
  instrs_.emplace_back(MeasureOp{q, bit});
  written_ |= std::uint64_t{1} << bit;
  return *this;
}

Circuit& Circuit::measure_all() {
  if (n_bits_ < n_qubits_) set_n_bits(n_qubits_);
  for (Qubit q = 0; q < n_qubits_; ++q) measure(q, q);
  return *this;
}

Circuit& Circuit::add_conditional(Gate g, unsigned bit, int value) {
  g = normalized(std::move(g));
  if (bit >= n_bits_) throw std::invalid_argument("Circuit: condition bit out of range");
  if (((written_ >> bit) & 1) == 0) {
    throw std::invalid_argument("Circuit: condition reads a bit no earlier measurement writes");
  }
  if (value != 0 && value != 1) throw std::invalid_argument("Circuit: condition value must be 0 or 1");
  instrs_.emplace_back(ControlledGate{std::move(g), bit, value});
  return *this;
}

Circuit& Circuit::append(const Circuit& other, unsigned qubit_offset, unsigned bit_offset) {
  if (other.n_qubits_ + qubit_offset > n_qubits_) {
    throw std::invalid_argument("Circuit::append: qubits out of range");
  }
  if (other.n_bits_ + bit_offset > n_bits_) set_n_bits(other.n_bits_ + bit_offset);
  for (const auto& ins : other.instrs_) {
    if (const auto* g = std::get_if<Gate>(&ins)) {
      add(shift_gate(*g, qubit_offset));
    } else if (const auto* m = std::get_if<MeasureOp>(&ins)) {
      measure(m->qubit + qubit_offset, m->bit + bit_offset);
    } else {
      const auto& c = std::get<ControlledGate>(ins);
      add_conditional(shift_gate(c.gate, qubit_offset), c.bit + bit_offset, c.value);
    }
  }
  return *this;
}

bool Circuit::is_terminal_measurement() const {
  std::uint64_t measured = 0;
  for (const auto& ins : instrs_) {
    if (std::holds_alternative<ControlledGate>(ins)) return false;
    if (const auto* m = std::get_if<MeasureOp>(&ins)) {
      if ((measured >> m->qubit) & 1) return false;
      measured |= std::uint64_t{1} << m->qubit;
    } else {
      for (Qubit q : std::get<Gate>(ins).targets()) {
        if ((measured >> q) & 1) return false;
      }
    }
  }
  return true;
}

std::size_t Circuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& ins : instrs_) n += std::holds_alternative<MeasureOp>(ins) ? 0 : 1;
  return n;
}

void Circuit::validate() const {
  if (n_bits_ > kMaxBits) throw std::invalid_argument("Circuit: more than 64 classical bits");
  std::uint64_t written = 0;
  for (const auto& ins : instrs_) {
    if (const auto* g = std::get_if<Gate>(&ins)) {
      check_gate(*g);
    } else if (const auto* m = std::get_if<MeasureOp>(&ins)) {
      if (m->qubit >= n_qubits_ || m->bit >= n_bits_) {
        throw std::invalid_argument("Circuit: measurement index out of range");
      }
      written |= std::uint64_t{1} << m->bit;
    } else {
      const auto& c = std::get<ControlledGate>(ins);
      check_gate(c.gate);
      if (c.bit >= n_bits_ || ((written >> c.bit) & 1) == 0) {
        throw std::invalid_argument("Circuit: condition reads an unwritten bit");
      }
    }
  }
}

}  // namespace sptprobe
