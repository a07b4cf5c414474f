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

#include <cmath>
#include <map>

#include "sptprobe/circuits/execute.hpp"
#include "sptprobe/circuits/library.hpp"
#include "sptprobe/noise/channels.hpp"
#include "support/dense_oracle.hpp"
#include "support/generators.hpp"

namespace sptprobe {
namespace {

namespace dense = testing::dense;

/// Pearson chi-square against `probs`. Cells expected below 5 counts are
/// pooled; a record landing on a zero-probability outcome fails outright.
::testing::AssertionResult chi_square_ok(const ShotRecord& rec, const std::vector<double>& probs) {
  const double n = static_cast<double>(rec.shots());
  std::map<std::uint64_t, double> counts;
  for (auto row : rec.rows) counts[row] += 1;
  for (const auto& [row, k] : counts) {
    if (row >= probs.size() || probs[row] < 1e-15) {
      return ::testing::AssertionFailure() << "impossible outcome " << row;
    }
  }
  double stat = 0.0, pooled_e = 0.0, pooled_o = 0.0;
  int cells = 0;
  for (std::size_t b = 0; b < probs.size(); ++b) {
    if (probs[b] < 1e-15) continue;
    const double e = n * probs[b];
    const double o = counts.count(b) ? counts[b] : 0.0;
    if (e < 5) {
      pooled_e += e;
      pooled_o += o;
      continue;
    }
    stat += (o - e) * (o - e) / e;
    ++cells;
  }
  if (pooled_e > 0) {
    stat += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
    ++cells;
  }
  // Upper 3-sigma quantile of chi2(df), Wilson-Hilferty approximation.
  const double df = std::max(1, cells - 1);
  const double h = 2.0 / (9.0 * df);
  const double bound = df * std::pow(1 - h + 3 * std::sqrt(h), 3);
  if (stat <= bound) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "chi2 " << stat << " > " << bound << " (df " << df << ")";
}

double ones_fraction(const ShotRecord& rec, unsigned bit) {
  double s = 0.0;
  for (std::size_t i = 0; i < rec.shots(); ++i) s += rec.bit(i, bit);
  return s / static_cast<double>(rec.shots());
}

Circuit h_measure() {
  Circuit c(1);
  c.add(Gate::h(0)).measure_all();
  return c;
}

TEST(Execute, EmptyCircuit) {
  const auto rec = execute(Circuit(2), 10, 1);
  EXPECT_EQ(rec.shots(), 10u);
  EXPECT_EQ(rec.n_bits, 0u);
  for (auto row : rec.rows) EXPECT_EQ(row, 0u);
  EXPECT_THROW(execute(Circuit(1), 0, 1), std::invalid_argument);
}

TEST(Execute, HadamardMeasureIsFair) {
  const auto rec = execute(h_measure(), 8192, 2024);
  EXPECT_NEAR(ones_fraction(rec, 0), 0.5, 3 * std::sqrt(0.25 / 8192));
}

TEST(Execute, ReadoutBiasShiftsTowardZero) {
  const NoiseModel noise({}, {}, ReadoutBias{0.07});
  const auto rec = execute(h_measure(), 8192, 2025);
  const auto biased = execute(h_measure(), noise, 8192, 2025);
  EXPECT_NEAR(ones_fraction(biased, 0), 0.43, 3 * std::sqrt(0.43 * 0.57 / 8192));
  EXPECT_NE(rec, biased);
  EXPECT_NEAR(exact_distribution(h_measure(), noise)[1], 0.43, 1e-15);
}

TEST(Execute, SeedReplayIsExact) {
  const auto c = swap_test_circuit(3, 2);
  EXPECT_EQ(execute(c, 500, 77), execute(c, 500, 77));
  EXPECT_NE(execute(c, 500, 77), execute(c, 500, 78));
  const NoiseModel noise({ChannelKind::dephasing, 0.05}, {ChannelKind::dephasing, 0.05},
                         ReadoutBias{0.05});
  EXPECT_EQ(execute(c, noise, 300, 5), execute(c, noise, 300, 5));
}

TEST(Execute, ShotsAreIndependentOfCount) {
  // Shot s only depends on (seed, s), so a longer run extends a shorter one.
  const auto c = symmetry_resolved_probability_circuit(4);
  const auto a = execute(c, 100, 9);
  const auto b = execute(c, 200, 9);
  for (std::size_t s = 0; s < 100; ++s) EXPECT_EQ(a.rows[s], b.rows[s]);
}

TEST(ExecuteProperty, ExactDistributionMatchesDenseOracle) {
  testing::Gen gen(601);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 1 + gen.below(5);
    Circuit c = gen.circuit(n, 20);
    c.measure_all();
    const auto got = exact_distribution(c);
    const auto psi = dense::run(c);
    for (Eigen::Index b = 0; b < psi.size(); ++b) {
      ASSERT_NEAR(got[static_cast<std::size_t>(b)], std::norm(psi(b)), 1e-12);
    }
  }
}

TEST(ExecuteProperty, LibraryCircuitsPassChiSquare) {
  std::vector<Circuit> lib = {
      swap_test_circuit(4, 4),
      swap_test_circuit(3, 3, Boundary::open, StatePrep::trivial),
      symmetry_resolved_probability_circuit(4),
      symmetry_resolved_probability_circuit(4, StatePrep::trivial),
      modified_swap_test_circuit(4, 4),
      modified_swap_test_circuit(3, 1, StatePrep::trivial),
      teleportation_circuit(input_prep_gates(InputState::plus_i), 0.6, 0.6,
                            TeleportKind::symmetry_breaking),
      teleportation_circuit(input_prep_gates(InputState::minus), 0.3, -0.3, TeleportKind::symmetric),
  };
  std::uint64_t seed = 100;
  for (const auto& c : lib) {
    EXPECT_TRUE(chi_square_ok(execute(c, 8192, ++seed), exact_distribution(c))) << c.name();
  }
}

TEST(ExecuteProperty, RandomCircuitsPassChiSquare) {
  testing::Gen gen(602);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned n = 1 + gen.below(4);
    Circuit c = gen.circuit(n, 12);
    c.measure_all();
    EXPECT_TRUE(chi_square_ok(execute(c, 8192, 700 + trial), exact_distribution(c)));
  }
}

TEST(ExecuteProperty, NoisyEvolutionMatchesDenseKrausSum) {
  testing::Gen gen(603);
  const NoiseModel noise({ChannelKind::dephasing, 0.07}, {ChannelKind::lowering_depolarizing, 0.11},
                         {});
  for (int trial = 0; trial < 15; ++trial) {
    const unsigned n = 1 + gen.below(4);
    const Circuit c = gen.circuit(n, 10);
    const auto dim = Eigen::Index{1} << n;
    dense::Mat rho = dense::Mat::Zero(dim, dim);
    rho(0, 0) = 1;
    for (const auto& ins : c.instructions()) {
      const Gate& g = std::get<Gate>(ins);
      const auto u = dense::gate_operator(g, n);
      rho = u * rho * u.adjoint();
      const auto* ch = noise.channel_for(g);
      ASSERT_NE(ch, nullptr);
      for (Qubit q : g.targets()) rho = dense::apply_kraus(rho, ch->operators(), {q}, n);
    }
    EXPECT_LT((final_mixed_state(c, noise).matrix() - rho).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ExecuteProperty, NoisySamplingFollowsDensityMatrix) {
  const NoiseModel noise({ChannelKind::dephasing, 0.05}, {ChannelKind::lowering_depolarizing, 0.05},
                         ReadoutBias{0.07});
  const auto c = swap_test_circuit(3, 3);
  EXPECT_TRUE(chi_square_ok(execute(c, noise, 8192, 31), exact_distribution(c, noise)));
}

TEST(Execute, MidCircuitMeasurementWithFeedForward) {
  // Measure a superposition, then copy the outcome with a conditional X.
  Circuit c(2, 2);
  c.add(Gate::h(0)).measure(0, 0).add_conditional(Gate::x(1), 0).measure(1, 1);
  EXPECT_THROW(exact_distribution(c), std::invalid_argument);
  const auto rec = execute(c, 2000, 3);
  for (std::size_t s = 0; s < rec.shots(); ++s) EXPECT_EQ(rec.bit(s, 0), rec.bit(s, 1));
  EXPECT_NEAR(ones_fraction(rec, 0), 0.5, 3 * std::sqrt(0.25 / 2000));

  const NoiseModel noise({ChannelKind::dephasing, 0.1}, {}, {});
  const auto noisy = execute(c, noise, 500, 3);
  for (std::size_t s = 0; s < noisy.shots(); ++s) EXPECT_EQ(noisy.bit(s, 0), noisy.bit(s, 1));
}

TEST(Execute, GatesOnUnmeasuredQubitsKeepMeasurementsDeferred) {
  Circuit c(2, 2);
  c.add(Gate::h(0)).measure(0, 0).add(Gate::x(1)).measure(1, 1);
  EXPECT_TRUE(c.is_terminal_measurement());
  const auto dist = exact_distribution(c);
  EXPECT_NEAR(dist[0b10], 0.5, 1e-15);
  EXPECT_NEAR(dist[0b11], 0.5, 1e-15);
  EXPECT_TRUE(chi_square_ok(execute(c, 4000, 8), dist));

  Circuit touched(1, 1);
  touched.add(Gate::h(0)).measure(0, 0).add(Gate::h(0));
  EXPECT_FALSE(touched.is_terminal_measurement());
  Circuit twice(1, 2);
  twice.measure(0, 0).measure(0, 1);
  EXPECT_FALSE(twice.is_terminal_measurement());
}

TEST(Execute, RejectsOversizedCircuits) {
  EXPECT_THROW(execute(Circuit(17), 1, 1), std::length_error);
  const NoiseModel noise({ChannelKind::dephasing, 0.1}, {}, {});
  Circuit wide(11);
  wide.add(Gate::h(0));
  EXPECT_THROW(execute(wide, noise, 1, 1), std::length_error);
}

}  // namespace
}  // namespace sptprobe
