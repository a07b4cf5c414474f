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

#include "sptprobe/circuits/text_format.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sptprobe {
namespace {

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

std::string gate_text(const Gate& g) {
  std::string out(gate_name(g.kind()));
  if (g.kind() == GateKind::PauliExp) {
    const PauliString local = g.pauli().restricted(g.targets());
    out += " " + format_angle(g.angle()) + " " + local.str();
  }
  for (Qubit q : g.targets()) out += " " + std::to_string(q);
  return out;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

unsigned to_uint(std::string_view s) {
  unsigned v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument("expected an unsigned integer, got '" + std::string(s) + "'");
  }
  return v;
}

double to_double(std::string_view s) {
  // from_chars for double is missing from older libstdc++; strtod is exact
  // for %.17g round trips.
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || tmp.empty()) {
    throw std::invalid_argument("expected a number, got '" + tmp + "'");
  }
  return v;
}

std::optional<GateKind> opcode(std::string_view s) {
  static constexpr GateKind kKinds[] = {GateKind::H,   GateKind::X,  GateKind::Y,
                                        GateKind::Z,   GateKind::S,  GateKind::Sdg,
                                        GateKind::CZ,  GateKind::CNOT, GateKind::CH,
                                        GateKind::PauliExp};
  for (GateKind k : kKinds) {
    if (gate_name(k) == s) return k;
  }
  return std::nullopt;
}

Gate parse_gate(GateKind kind, const std::vector<std::string_view>& tok, std::size_t begin,
                std::size_t end, unsigned n_qubits) {
  if (kind == GateKind::PauliExp) {
    if (end - begin < 3) throw std::invalid_argument("PEXP needs angle, letters and targets");
    const double angle = to_double(tok[begin + 1]);
    const PauliString local = PauliString::parse(tok[begin + 2]);
    if (end - begin - 3 != local.n_sites()) {
      throw std::invalid_argument("PEXP needs one target per Pauli letter");
    }
    PauliString full(n_qubits);
    for (unsigned j = 0; j < local.n_sites(); ++j) {
      const unsigned q = to_uint(tok[begin + 3 + j]);
      if (q >= n_qubits) throw std::invalid_argument("PEXP target out of range");
      if (local.at(j) == Pauli::I) throw std::invalid_argument("PEXP letters must not be I");
      full.set(q, local.at(j));
    }
    if (full.weight() != local.n_sites()) throw std::invalid_argument("PEXP repeats a target");
    return Gate::pauli_exp(full.times_phase(local.phase_exponent()), angle);
  }
  std::vector<Qubit> targets;
  for (std::size_t i = begin + 1; i < end; ++i) targets.push_back(to_uint(tok[i]));
  return Gate::fixed(kind, std::move(targets));
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  if (!c.name().empty()) out << "name " << c.name() << '\n';
  if (!c.figure().empty()) out << "figure " << c.figure() << '\n';
  out << "qubits " << c.n_qubits() << '\n';
  out << "bits " << c.n_bits() << '\n';
  for (const auto& ins : c.instructions()) {
    if (const auto* g = std::get_if<Gate>(&ins)) {
      out << gate_text(*g) << '\n';
    } else if (const auto* m = std::get_if<MeasureOp>(&ins)) {
      out << "MEASURE " << m->qubit << ' ' << m->bit << '\n';
    } else {
      const auto& cg = std::get<ControlledGate>(ins);
      out << gate_text(cg.gate) << " if c" << cg.bit << '=' << cg.value << '\n';
    }
  }
  return out.str();
}

Circuit parse_circuit(std::string_view text) {
  std::string name;
  std::string figure;
  std::optional<unsigned> qubits;
  unsigned bits = 0;
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split(line);
    if (tok.empty()) continue;
    try {
      const std::string_view op = tok[0];
      if (!circuit && (op == "name" || op == "figure")) {
        const std::size_t at = line.find(op) + op.size();
        std::string value(line.substr(at));
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t\r") + 1);
        (op == "name" ? name : figure) = value;
        continue;
      }
      if (!circuit && op == "qubits" && tok.size() == 2) {
        qubits = to_uint(tok[1]);
        continue;
      }
      if (!circuit && op == "bits" && tok.size() == 2) {
        bits = to_uint(tok[1]);
        continue;
      }
      if (!circuit) {
        if (!qubits) throw std::invalid_argument("'qubits' must precede the first instruction");
        circuit.emplace(*qubits, bits, name);
        circuit->set_figure(figure);
      }
      if (op == "MEASURE") {
        if (tok.size() != 3) throw std::invalid_argument("MEASURE takes a qubit and a bit");
        circuit->measure(to_uint(tok[1]), to_uint(tok[2]));
        continue;
      }
      const auto kind = opcode(op);
      if (!kind) throw std::invalid_argument("unknown opcode '" + std::string(op) + "'");
      std::size_t end = tok.size();
      std::optional<std::pair<unsigned, int>> cond;
      if (tok.size() >= 2 && tok[tok.size() - 2] == "if") {
        const std::string_view c = tok.back();
        const std::size_t eq = c.find('=');
        if (c.size() < 4 || c[0] != 'c' || eq == std::string_view::npos) {
          throw std::invalid_argument("condition must look like c<bit>=<value>");
        }
        cond.emplace(to_uint(c.substr(1, eq - 1)), static_cast<int>(to_uint(c.substr(eq + 1))));
        end -= 2;
      }
      Gate g = parse_gate(*kind, tok, 0, end, circuit->n_qubits());
      if (cond) {
        circuit->add_conditional(std::move(g), cond->first, cond->second);
      } else {
        circuit->add(std::move(g));
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!circuit) {
    if (!qubits) throw std::invalid_argument("circuit text: missing 'qubits' line");
    circuit.emplace(*qubits, bits, name);
    circuit->set_figure(figure);
  }
  return std::move(*circuit);
}

}  // namespace sptprobe
