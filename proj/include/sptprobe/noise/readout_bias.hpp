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
#include <span>
#include <string>
#include <vector>

#include "sptprobe/qsim/rng.hpp"

namespace sptprobe {

enum class BiasVariant {
  /// 1 -> 0 with probability 2 eps, 0 never flips. A uniform true bit reads 0
  /// with probability 0.5 + eps.
  asymmetric,
  /// Both directions flip with probability eps (confusion-matrix variant for
  /// sensitivity studies).
  symmetric,
};

const char* to_string(BiasVariant v);
BiasVariant parse_bias_variant(const std::string& text);

struct ReadoutBias {
  double epsilon = 0.0;
  BiasVariant variant = BiasVariant::asymmetric;

  /// Throws std::invalid_argument unless 0 <= eps < 0.5.
  void validate() const;
  double flip_one_to_zero() const { return variant == BiasVariant::asymmetric ? 2 * epsilon : epsilon; }
  double flip_zero_to_one() const { return variant == BiasVariant::asymmetric ? 0.0 : epsilon; }
  bool is_zero() const { return epsilon == 0.0; }
};

/// Per-qubit marginal P(1) after the bias.
std::vector<double> apply_readout_bias(std::span<const double> p_one, const ReadoutBias& bias);

/// Joint distribution over 2^n outcomes after independent per-bit flips of
/// the bits selected by `bit_mask`.
std::vector<double> apply_readout_bias_joint(std::span<const double> probs, const ReadoutBias& bias,
                                             std::uint64_t bit_mask = ~std::uint64_t{0});

/// Samples the recorded bit for a true outcome.
int biased_bit(int bit, const ReadoutBias& bias, ShotRng& rng);

struct BiasPredictions {
  /// L_A (ln 2 - 4 eps), first order in eps.
  double neg_log_s2_approx = 0.0;
  /// -L_A ln[(0.5+eps)^2 + 2(0.5+eps)(0.5-eps) - (0.5-eps)^2].
  double neg_log_s2_exact = 0.0;
  /// (2 eps)^L_A.
  double sector_gap = 0.0;
};

/// Predictions for a maximally random register read through the asymmetric
/// bias. Throws std::invalid_argument for eps outside [0, 0.5).
BiasPredictions bias_model_predictions(double eps, unsigned l_a);

}  // namespace sptprobe
