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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sptprobe/circuits/library.hpp"
#include "sptprobe/circuits/text_format.hpp"
#include "support/generators.hpp"

namespace sptprobe {
namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SPTPROBE_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(TextFormat, GoldenLibraryCircuits) {
  EXPECT_EQ(to_text(cluster_state_circuit(4, Boundary::periodic)), golden("cluster_L4_periodic.circ"));
  EXPECT_EQ(to_text(swap_test_circuit(2, 2, Boundary::open, StatePrep::trivial)),
            golden("swap_test_trivial_L2.circ"));
  EXPECT_EQ(to_text(teleportation_circuit(input_prep_gates(InputState::plus_i), 0.6, 0.6,
                                          TeleportKind::symmetric)),
            golden("teleport_symmetric_a06.circ"));
}

TEST(TextFormat, GoldenFilesParseBack) {
  for (const char* f :
       {"cluster_L4_periodic.circ", "swap_test_trivial_L2.circ", "teleport_symmetric_a06.circ"}) {
    const std::string text = golden(f);
    EXPECT_EQ(to_text(parse_circuit(text)), text) << f;
  }
}

TEST(TextFormatProperty, RoundTripRandomCircuits) {
  testing::Gen gen(501);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + gen.below(6);
    Circuit c(n, 1);
    c.append(gen.circuit(n, 15));
    c.set_name("random");
    c.measure(0, 0);
    c.add_conditional(gen.gate(n), 0, static_cast<int>(gen.below(2)));
    const Circuit back = parse_circuit(to_text(c));
    ASSERT_EQ(back, c) << to_text(c);
  }
}

TEST(TextFormat, CommentsAndBlankLines) {
  const auto c = parse_circuit(
      "# header\n"
      "qubits 2\n"
      "bits 1\n"
      "\n"
      "H 0   # superpose\n"
      "CNOT 0 1\n"
      "MEASURE 1 0\n"
      "Z 0 if c0=1\n");
  EXPECT_EQ(c.n_qubits(), 2u);
  EXPECT_EQ(c.n_bits(), 1u);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<ControlledGate>(c.instructions().back()));
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
  auto message = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("qubits 2\nH 0\nFOO 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("qubits 2\nH 5\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("qubits 2\nX 1 if c0=1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("qubits 3\nPEXP 0.1 +XZ 0 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("H 0\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("").find("qubits"), std::string::npos);
}

}  // namespace
}  // namespace sptprobe
