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
#include <string>
#include <variant>
#include <vector>

#include "sptprobe/qsim/gate.hpp"

namespace sptprobe {

struct MeasureOp {
  Qubit qubit = 0;
  unsigned bit = 0;

  friend bool operator==(const MeasureOp&, const MeasureOp&) = default;
};

/// Gate applied only when classical bit `bit` holds `value`.
struct ControlledGate {
  Gate gate;
  unsigned bit = 0;
  int value = 1;

  friend bool operator==(const ControlledGate&, const ControlledGate&) = default;
};

using Instruction = std::variant<Gate, MeasureOp, ControlledGate>;

/// Ordered instruction list over n qubits and n classical bits (at most 64).
/// Every mutation validates indices; a condition must read a bit written by
/// an earlier measurement.
class Circuit {
 public:
  static constexpr unsigned kMaxBits = 64;

  explicit Circuit(unsigned n_qubits, unsigned n_bits = 0, std::string name = "");

  Circuit& add(Gate g);
  Circuit& measure(Qubit q, unsigned bit);
  /// Measures qubit k into bit k for every qubit (bits grown as needed).
  Circuit& measure_all();
  Circuit& add_conditional(Gate g, unsigned bit, int value = 1);
  /// Appends `other`'s instructions with qubits shifted by `qubit_offset` and
  /// bits by `bit_offset`.
  Circuit& append(const Circuit& other, unsigned qubit_offset = 0, unsigned bit_offset = 0);

  unsigned n_qubits() const { return n_qubits_; }
  unsigned n_bits() const { return n_bits_; }
  void set_n_bits(unsigned n);
  const std::vector<Instruction>& instructions() const { return instrs_; }
  std::size_t size() const { return instrs_.size(); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::string& figure() const { return figure_; }
  void set_figure(std::string figure) { figure_ = std::move(figure); }

  /// True when nothing is conditional, no qubit is measured twice and no gate
  /// touches a qubit after its measurement. Such measurements commute with
  /// everything after them, so the outcome distribution can be read off the
  /// state after all gates.
  bool is_terminal_measurement() const;
  std::size_t gate_count() const;

  /// Re-checks all invariants; throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_gate(const Gate& g) const;
  Gate normalized(Gate g) const;

  unsigned n_qubits_ = 0;
  unsigned n_bits_ = 0;
  std::string name_;
  std::string figure_;
  std::vector<Instruction> instrs_;
  std::uint64_t written_ = 0;
};

/// Classical results of repeated execution. Row s holds shot s with classical
/// bit j at bit position j.
struct ShotRecord {
  unsigned n_bits = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> rows;

  std::size_t shots() const { return rows.size(); }
  int bit(std::size_t shot, unsigned j) const { return static_cast<int>((rows[shot] >> j) & 1); }

  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

/// Gate with every qubit index shifted by `offset`.
Gate shift_gate(const Gate& g, unsigned offset);

}  // namespace sptprobe
