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

#include "sptprobe/circuits/circuit.hpp"
#include "sptprobe/entanglement/estimators.hpp"
#include "sptprobe/noise/channels.hpp"
#include "sptprobe/noise/noise_model.hpp"
#include "sptprobe/noise/readout_bias.hpp"
#include "sptprobe/qsim/ops.hpp"
#include "sptprobe/qsim/rng.hpp"
#include "support/dense_oracle.hpp"
#include "support/generators.hpp"

namespace sptprobe {
namespace {

namespace dense = testing::dense;
using Mat = Eigen::MatrixXcd;

Mat channel_apply(const KrausChannel& ch, const Mat& rho) {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& k : ch.operators()) out += k * rho * k.adjoint();
  return out;
}

Mat projector(int b) { return dense::letter(b ? '1' : '0'); }

TEST(Channels, AllBuiltInsAreComplete) {
  for (double p : {0.0, 0.01, 0.3, 0.5, 0.99, 1.0}) {
    EXPECT_LT(dephasing_channel(p).completeness_error(), 1e-12);
    EXPECT_LT(lowering_depolarizing_channel(p).completeness_error(), 1e-12);
    EXPECT_LT(amplitude_damping_channel(p).completeness_error(), 1e-12);
  }
  for (double eps : {0.0, 0.07, 0.49}) {
    for (char b : {'X', 'Y', 'Z'}) EXPECT_LT(readout_bias_channel(eps, b).completeness_error(), 1e-12);
  }
}

TEST(Channels, RangeChecks) {
  EXPECT_THROW(dephasing_channel(-0.1), std::invalid_argument);
  EXPECT_THROW(lowering_depolarizing_channel(1.1), std::invalid_argument);
  EXPECT_THROW(readout_bias_channel(0.5, 'Z'), std::invalid_argument);
  EXPECT_THROW(readout_bias_channel(0.1, 'Q'), std::invalid_argument);
}

TEST(Channels, ZeroStrengthIsIdentity) {
  testing::Gen gen(401);
  const auto rho = gen.mixed_state(1).matrix();
  EXPECT_LT((channel_apply(dephasing_channel(0), rho) - rho).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((channel_apply(lowering_depolarizing_channel(0), rho) - rho).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Channels, DephasingHalfKillsCoherence) {
  const Mat plus = Mat::Constant(2, 2, 0.5);
  const Mat out = channel_apply(dephasing_channel(0.5), plus);
  EXPECT_LT((out - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-15);
  // <X> scales by 1 - 2p.
  const Mat x = dense::letter('X');
  EXPECT_NEAR((channel_apply(dephasing_channel(0.2), plus) * x).trace().real(), 0.6, 1e-15);
}

TEST(ChannelsProperty, DephasingCommutesWithZConjugation) {
  testing::Gen gen(402);
  const Mat z = dense::letter('Z');
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = gen.mixed_state(1).matrix();
    const auto ch = dephasing_channel(gen.uniform());
    EXPECT_LT((channel_apply(ch, z * rho * z) - z * channel_apply(ch, rho) * z).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(Channels, LoweringDepolarizingMatchesWrittenOperators) {
  for (double p : {0.1, 0.6}) {
    const double s = std::sqrt(1 - p);
    const Mat id = Mat::Identity(2, 2);
    const Mat k1 = ((1 + s) * id - (1 - s) * dense::letter('Z')) / 2.0;
    // sigma^- = (X - iY)/2.
    const Mat k2 = std::sqrt(p) * (dense::letter('X') - Complex(0, 1) * dense::letter('Y')) / 2.0;
    const auto ops = lowering_depolarizing_channel(p).operators();
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_LT((ops[0] - k1).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((ops[1] - k2).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Channels, LoweringDepolarizingAtOneEmptiesTheZeroState) {
  // With sigma^- = |1><0| the full-strength channel drains |0> into |1>.
  const auto ch = lowering_depolarizing_channel(1.0);
  EXPECT_LT((channel_apply(ch, projector(0)) - projector(1)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((channel_apply(ch, projector(1)) - projector(1)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ChannelsProperty, LoweringDepolarizingKeepsZCommutation) {
  testing::Gen gen(403);
  const Mat z = dense::letter('Z');
  for (int trial = 0; trial < 20; ++trial) {
    Mat rho = gen.mixed_state(1).matrix();
    rho(0, 1) = rho(1, 0) = 0;  // [rho, Z] = 0
    const Mat out = channel_apply(lowering_depolarizing_channel(gen.uniform()), rho);
    EXPECT_LT((out * z - z * out).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Channels, ReadoutBiasChannelShiftsMeasuredMarginal) {
  // |+> read in X is deterministic; I/2 read in any basis lands at 0.5 + eps.
  const double eps = 0.07;
  for (char b : {'X', 'Y', 'Z'}) {
    const Mat out = channel_apply(readout_bias_channel(eps, b), Mat::Identity(2, 2) / 2.0);
    const Mat obs = dense::letter(b == 'X' ? 'X' : b == 'Y' ? 'Y' : 'Z');
    EXPECT_NEAR((out * obs).trace().real(), 2 * eps, 1e-14) << b;
  }
}

TEST(ReadoutBias, MarginalsAndJoint) {
  const ReadoutBias none{};
  const std::vector<double> p = {0.5, 1.0, 0.0};
  EXPECT_EQ(apply_readout_bias(p, none), p);
  const ReadoutBias bias{0.07};
  const auto out = apply_readout_bias(p, bias);
  EXPECT_NEAR(out[0], 0.43, 1e-15);
  EXPECT_NEAR(out[1], 0.86, 1e-15);
  EXPECT_EQ(out[2], 0.0);

  // Joint: two uniform bits, first one masked out.
  const std::vector<double> joint = {0.25, 0.25, 0.25, 0.25};
  const auto j = apply_readout_bias_joint(joint, bias, 0b10);
  EXPECT_NEAR(j[0] + j[1], 0.57, 1e-15);
  EXPECT_NEAR(j[0] + j[2], 0.5, 1e-15);
  EXPECT_THROW((ReadoutBias{0.5}.validate()), std::invalid_argument);
}

TEST(ReadoutBias, SymmetricVariantFlipsBothWays) {
  const ReadoutBias sym{0.1, BiasVariant::symmetric};
  const std::vector<double> p = {1.0, 0.0};
  const auto out = apply_readout_bias(p, sym);
  EXPECT_NEAR(out[0], 0.9, 1e-15);
  EXPECT_NEAR(out[1], 0.1, 1e-15);
  EXPECT_EQ(parse_bias_variant("symmetric"), BiasVariant::symmetric);
}

TEST(ReadoutBias, ModelPredictions) {
  const auto zero = bias_model_predictions(0.0, 3);
  EXPECT_NEAR(zero.neg_log_s2_approx, 3 * std::log(2.0), 1e-15);
  EXPECT_NEAR(zero.neg_log_s2_exact, 3 * std::log(2.0), 1e-15);
  EXPECT_EQ(zero.sector_gap, 0.0);
  const auto one = bias_model_predictions(0.07, 1);
  EXPECT_NEAR(one.neg_log_s2_approx, std::log(2.0) - 0.28, 1e-15);
  EXPECT_NEAR(one.neg_log_s2_approx, 0.413, 5e-4);
  EXPECT_NEAR(one.sector_gap, 0.14, 1e-15);
  const double a = 0.57, b = 0.43;
  EXPECT_NEAR(one.neg_log_s2_exact, -std::log(a * a + 2 * a * b - b * b), 1e-15);
  EXPECT_NEAR(bias_model_predictions(0.07, 3).sector_gap, 2.744e-3, 1e-15);
  EXPECT_THROW(bias_model_predictions(0.6, 1), std::invalid_argument);
}

// Property: i.i.d. biased bits through the purity estimator reproduce the
// unapproximated model within 3 standard errors at 1e5 samples.
TEST(ReadoutBiasProperty, RandomQubitModelThroughEstimator) {
  const double eps = 0.07;
  const ReadoutBias bias{eps};
  for (unsigned l_a = 1; l_a <= 3; ++l_a) {
    ShotRecord rec{2 * l_a, 99, {}};
    ShotRng rng(derive_seed(99, l_a));
    for (int s = 0; s < 100000; ++s) {
      std::uint64_t row = 0;
      for (unsigned j = 0; j < 2 * l_a; ++j) {
        const int truth = rng.bernoulli(0.5) ? 1 : 0;
        row |= static_cast<std::uint64_t>(biased_bit(truth, bias, rng)) << j;
      }
      rec.rows.push_back(row);
    }
    const auto est = estimate_S2_from_shots(rec, l_a);
    const double want = std::exp(-bias_model_predictions(eps, l_a).neg_log_s2_exact);
    EXPECT_LT(std::abs(est.value - want), 3 * est.std_error) << "l_a=" << l_a;
  }
}

TEST(NoiseModel, ChannelSelectionByArity) {
  const NoiseModel m({ChannelKind::dephasing, 0.01}, {ChannelKind::lowering_depolarizing, 0.05},
                     ReadoutBias{0.07});
  ASSERT_NE(m.channel_for(Gate::h(0)), nullptr);
  EXPECT_EQ(m.channel_for(Gate::h(0))->operators().size(), 2u);
  ASSERT_NE(m.channel_for(Gate::cz(0, 1)), nullptr);
  EXPECT_TRUE(m.has_gate_noise());
  EXPECT_FALSE(m.is_noiseless());
  EXPECT_TRUE(NoiseModel().is_noiseless());
  const NoiseModel only_two({}, {ChannelKind::dephasing, 0.1}, {});
  EXPECT_EQ(only_two.channel_for(Gate::x(1)), nullptr);
  EXPECT_EQ(parse_channel_kind("depolarizing"), ChannelKind::lowering_depolarizing);
  EXPECT_THROW(parse_channel_kind("thermal"), std::invalid_argument);
}

}  // namespace
}  // namespace sptprobe
