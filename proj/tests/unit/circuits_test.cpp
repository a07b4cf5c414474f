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

#include <bit>
#include <cmath>
#include <numbers>

#include "sptprobe/circuits/execute.hpp"
#include "sptprobe/circuits/library.hpp"
#include "sptprobe/qsim/ops.hpp"
#include "sptprobe/symmetry/parity.hpp"
#include "support/dense_oracle.hpp"

namespace sptprobe {
namespace {

namespace dense = testing::dense;
using namespace std::complex_literals;

double parity_expectation(const std::vector<double>& probs, std::uint64_t mask) {
  double out = 0.0;
  for (std::size_t b = 0; b < probs.size(); ++b) out += (std::popcount(b & mask) & 1) ? -probs[b] : probs[b];
  return out;
}

TEST(Circuit, ValidatesIndicesAndConditions) {
  Circuit c(2, 1);
  EXPECT_THROW(c.add(Gate::h(2)), std::invalid_argument);
  EXPECT_THROW(c.measure(0, 1), std::invalid_argument);
  EXPECT_THROW(c.add_conditional(Gate::x(1), 0), std::invalid_argument);  // bit 0 not written yet
  c.measure(0, 0);
  EXPECT_NO_THROW(c.add_conditional(Gate::x(1), 0));
  EXPECT_FALSE(c.is_terminal_measurement());
}

TEST(Library, SmallestClusterIsStabilized) {
  const auto c = cluster_state_circuit(2, Boundary::open);
  EXPECT_EQ(c.gate_count(), 3u);
  const auto psi = final_state(c);
  EXPECT_NEAR(pauli_expectation(psi, PauliString::parse("XZ")).real(), 1.0, 1e-14);
  EXPECT_NEAR(pauli_expectation(psi, PauliString::parse("ZX")).real(), 1.0, 1e-14);
}

TEST(Library, OpenChainEndStabilizers) {
  const auto psi = final_state(cluster_state_circuit(4, Boundary::open));
  EXPECT_NEAR(pauli_expectation(psi, PauliString::parse("XZII")).real(), 1.0, 1e-14);
  EXPECT_NEAR(pauli_expectation(psi, PauliString::parse("IIZX")).real(), 1.0, 1e-14);
}

TEST(Library, PeriodicAddsOneCz) {
  const auto open = cluster_state_circuit(4, Boundary::open);
  const auto ring = cluster_state_circuit(4, Boundary::periodic);
  EXPECT_EQ(ring.gate_count(), open.gate_count() + 1);
  EXPECT_EQ(std::get<Gate>(ring.instructions().back()), Gate::cz(3, 0));
  EXPECT_THROW(cluster_state_circuit(1, Boundary::open), std::invalid_argument);
}

TEST(Library, ClusterMatchesDenseStabilizerProjector) {
  // The cluster state is the normalized image of prod (1 + h_i)/2.
  for (Boundary b : {Boundary::open, Boundary::periodic}) {
    const unsigned L = 6;
    const auto dim = Eigen::Index{1} << L;
    dense::Mat proj = dense::Mat::Identity(dim, dim);
    for (const auto& h : cluster_stabilizers(L, b)) {
      proj = proj * (dense::Mat::Identity(dim, dim) + dense::pauli(h, L)) / 2.0;
    }
    EXPECT_NEAR(proj.trace().real(), 1.0, 1e-12);
    const auto psi = final_state(cluster_state_circuit(L, b));
    dense::Vec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = psi[static_cast<std::size_t>(i)];
    EXPECT_NEAR(std::abs((v.adjoint() * proj * v)(0, 0)), 1.0, 1e-12);
  }
}

TEST(Library, SwapBlockSendsSingletToOneOne) {
  Circuit c(2, 0);
  c.add(Gate::h(0)).add(Gate::cnot(0, 1)).add(Gate::x(1)).add(Gate::z(0));
  append_swap_block(c, 0, 1);
  c.measure_all();
  EXPECT_NEAR(exact_distribution(c)[3], 1.0, 1e-14);

  Circuit zeros(2, 0);
  append_swap_block(zeros, 0, 1);
  zeros.measure_all();
  EXPECT_NEAR(exact_distribution(zeros)[3], 0.0, 1e-14);
}

TEST(Library, SwapTestOnPureCopiesNeverFlipsSign) {
  for (unsigned L : {2u, 3u, 4u}) {
    const auto c = swap_test_circuit(L, L);
    const auto probs = exact_distribution(c);
    double signed_sum = 0.0;
    const std::uint64_t low = (std::uint64_t{1} << L) - 1;
    for (std::size_t b = 0; b < probs.size(); ++b) {
      const bool odd = std::popcount(b & (b >> L) & low) & 1;
      signed_sum += odd ? -probs[b] : probs[b];
    }
    EXPECT_NEAR(signed_sum, 1.0, 1e-12);
  }
  EXPECT_THROW(swap_test_circuit(4, 5), std::invalid_argument);
  EXPECT_THROW(swap_test_circuit(4, 0), std::invalid_argument);
}

TEST(Library, ProbabilityCircuitParities) {
  const auto trivial =
      exact_distribution(symmetry_resolved_probability_circuit(4, StatePrep::trivial));
  for (unsigned l_a = 1; l_a <= 4; ++l_a) {
    EXPECT_NEAR(parity_expectation(trivial, (1u << l_a) - 1), 1.0, 1e-12);
  }
  const auto cl = exact_distribution(symmetry_resolved_probability_circuit(4));
  EXPECT_NEAR(parity_expectation(cl, 0b1111), 1.0, 1e-12);
  for (unsigned l_a = 1; l_a <= 3; ++l_a) {
    EXPECT_NEAR(parity_expectation(cl, (1u << l_a) - 1), 0.0, 1e-12) << l_a;
  }
}

// Eigenvectors of (Z (x) I) SWAP worked out by hand: |00> (+1), |11> (-1),
// |01> -+ i|10> (+-i), with bit 0 the copy-1 qubit.
TEST(Library, DecodeTableAgreesWithAnalyticEigenvectors) {
  const double r = 1 / std::sqrt(2.0);
  const std::vector<std::pair<std::vector<Complex>, Complex>> eig = {
      {{1, 0, 0, 0}, 1.0},
      {{0, 0, 0, 1}, -1.0},
      {{0, r, -1i * r, 0}, 1i},
      {{0, r, 1i * r, 0}, -1i},
  };
  const auto& table = modified_swap_decode_table();
  Circuit block(2);
  append_modified_swap_block(block, 0, 1);
  for (const auto& [amps, lambda] : eig) {
    // Independent oracle: the eigenvalue equation itself.
    const dense::Mat m = dense::lift(dense::letter('Z'), {0}, 2) * dense::controlled(dense::letter('X'), 0, 1, 2) *
                         dense::controlled(dense::letter('X'), 1, 0, 2) *
                         dense::controlled(dense::letter('X'), 0, 1, 2);
    dense::Vec v(4);
    for (int i = 0; i < 4; ++i) v(i) = amps[static_cast<std::size_t>(i)];
    ASSERT_LT((m * v - lambda * v).cwiseAbs().maxCoeff(), 1e-14);

    PureState psi = PureState::from_amplitudes(amps);
    for (const auto& ins : block.instructions()) apply_gate(psi, std::get<Gate>(ins));
    const auto probs = basis_probabilities(psi);
    int hit = -1;
    for (int b = 0; b < 4; ++b) {
      if (probs[static_cast<std::size_t>(b)] > 1 - 1e-12) hit = b;
    }
    ASSERT_GE(hit, 0);
    EXPECT_LT(std::abs(table[static_cast<std::size_t>(hit)] - lambda), 1e-14);
  }
}

TEST(Library, ModifiedBlockInXFrame) {
  // (|+-> + i|-+>)/sqrt2 is an eigenvector of (X (x) I) SWAP; after the X
  // frame rotation it lands on a single outcome.
  const double r = 1 / std::sqrt(2.0);
  auto state_pm = [&](int s0, int s1) {
    std::vector<Complex> a(4);
    for (int b = 0; b < 4; ++b) {
      const double f0 = (b & 1) ? s0 * r : r;
      const double f1 = (b & 2) ? s1 * r : r;
      a[static_cast<std::size_t>(b)] = f0 * f1;
    }
    return a;
  };
  const auto pm = state_pm(1, -1);
  const auto mp = state_pm(-1, 1);
  std::vector<Complex> amps(4);
  for (int b = 0; b < 4; ++b) amps[static_cast<std::size_t>(b)] = r * (pm[static_cast<std::size_t>(b)] + 1i * mp[static_cast<std::size_t>(b)]);

  Circuit c(2);
  append_frame_rotation(c, {'X', 'X'});
  append_modified_swap_block(c, 0, 1);
  PureState psi = PureState::from_amplitudes(amps);
  for (const auto& ins : c.instructions()) apply_gate(psi, std::get<Gate>(ins));
  const auto probs = basis_probabilities(psi);
  int hits = 0;
  for (double p : probs) hits += p > 1 - 1e-12;
  EXPECT_EQ(hits, 1);

  // |++> decodes to +1.
  PureState pp(2);
  Circuit prep(2);
  prep.add(Gate::h(0)).add(Gate::h(1));
  prep.append(c);
  for (const auto& ins : prep.instructions()) apply_gate(pp, std::get<Gate>(ins));
  const auto pp_probs = basis_probabilities(pp);
  Complex decoded = 0;
  for (int b = 0; b < 4; ++b) decoded += pp_probs[static_cast<std::size_t>(b)] * modified_swap_decode_table()[static_cast<std::size_t>(b)];
  EXPECT_LT(std::abs(decoded - 1.0), 1e-12);
}

TEST(Library, ModifiedTestOnClusterCopiesGivesOne) {
  const unsigned L = 4;
  const auto probs = exact_distribution(modified_swap_test_circuit(L, L));
  const auto& table = modified_swap_decode_table();
  Complex mean = 0;
  for (std::size_t row = 0; row < probs.size(); ++row) {
    Complex v = 1;
    for (unsigned i = 0; i < L; ++i) v *= table[((row >> i) & 1) | (((row >> (L + i)) & 1) << 1)];
    mean += probs[row] * v;
  }
  EXPECT_LT(std::abs(mean - 1.0), 1e-12);
}

// ---- teleportation ----------------------------------------------------------

/// Fidelity of the corrected output on one measurement branch, or -1 when the
/// branch has zero probability. Also returns the branch probability.
std::pair<double, double> branch_fidelity(const Circuit& c, unsigned branch, InputState in) {
  PureState psi = final_state(c);
  double p = 1.0;
  for (Qubit q = 0; q < 4; ++q) {
    const int b = static_cast<int>((branch >> q) & 1);
    const double pb = b ? probability_one(psi, q) : 1 - probability_one(psi, q);
    if (pb < 1e-14) return {-1.0, 0.0};
    p *= collapse(psi, q, b);
  }
  const auto out = partial_trace(psi, {kTeleportOutput});
  const auto bits = [&](unsigned q) { return static_cast<int>((branch >> q) & 1); };
  // Pauli frame: Z^{b0} X^{b1} Z^{b2} X^{b3}.
  const int sx = (bits(0) + bits(2)) & 1 ? -1 : 1;
  const int sz = (bits(1) + bits(3)) & 1 ? -1 : 1;
  const double x = pauli_expectation(out, PauliString::parse("X")).real() * sx;
  const double y = pauli_expectation(out, PauliString::parse("Y")).real() * sx * sz;
  const double z = pauli_expectation(out, PauliString::parse("Z")).real() * sz;
  const auto n = bloch_vector(in);
  return {(1 + x * n[0] + y * n[1] + z * n[2]) / 2, p};
}

TEST(Teleport, EveryBranchIsExactWithoutPerturbation) {
  for (InputState in : kAllInputStates) {
    const auto c = teleportation_circuit(input_prep_gates(in), 0.0, 0.0, TeleportKind::none);
    double total = 0.0;
    for (unsigned branch = 0; branch < 16; ++branch) {
      const auto [f, p] = branch_fidelity(c, branch, in);
      ASSERT_GT(p, 0.0);
      EXPECT_NEAR(f, 1.0, 1e-12) << to_string(in) << " branch " << branch;
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

double exact_min_fidelity(double alpha, double beta, TeleportKind kind) {
  double f_min = 1.0;
  for (InputState in : kAllInputStates) {
    const auto c = teleportation_circuit(input_prep_gates(in), alpha, beta, kind);
    double f = 0.0;
    for (unsigned branch = 0; branch < 16; ++branch) {
      const auto [fb, p] = branch_fidelity(c, branch, in);
      if (p > 0) f += p * fb;
    }
    f_min = std::min(f_min, f);
  }
  return f_min;
}

TEST(Teleport, SymmetricPerturbationKeepsUnitFidelity) {
  for (int i = 0; i <= 20; ++i) {
    const double a = std::numbers::pi * i / 20;
    EXPECT_NEAR(exact_min_fidelity(a, a, TeleportKind::symmetric), 1.0, 1e-12) << a;
    EXPECT_NEAR(exact_min_fidelity(a, -a, TeleportKind::symmetric), 1.0, 1e-12) << a;
  }
}

TEST(Teleport, BreakingPerturbationLosesFidelity) {
  const double f = exact_min_fidelity(0.6, 0.6, TeleportKind::symmetry_breaking);
  EXPECT_LT(f, 0.9);
  EXPECT_NEAR(f, std::cos(0.6) * std::cos(0.6), 1e-12);
  EXPECT_NEAR(exact_min_fidelity(0.0, 0.0, TeleportKind::symmetry_breaking), 1.0, 1e-12);
}

TEST(Teleport, InputStatesHaveTheirBlochVectors) {
  for (InputState in : kAllInputStates) {
    Circuit c(1);
    for (const Gate& g : input_prep_gates(in)) c.add(g);
    const auto psi = final_state(c);
    const auto n = bloch_vector(in);
    EXPECT_NEAR(pauli_expectation(psi, PauliString::parse("X")).real(), n[0], 1e-14);
    EXPECT_NEAR(pauli_expectation(psi, PauliString::parse("Y")).real(), n[1], 1e-14);
    EXPECT_NEAR(pauli_expectation(psi, PauliString::parse("Z")).real(), n[2], 1e-14);
    EXPECT_EQ(parse_input_state(to_string(in)), in);
  }
}

}  // namespace
}  // namespace sptprobe
