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

#include "sptprobe/noise/readout_bias.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sptprobe {

const char* to_string(BiasVariant v) {
  return v == BiasVariant::asymmetric ? "asymmetric" : "symmetric";
}

BiasVariant parse_bias_variant(const std::string& text) {
  if (text == "asymmetric") return BiasVariant::asymmetric;
  if (text == "symmetric") return BiasVariant::symmetric;
  throw std::invalid_argument("unknown readout bias variant '" + text + "'");
}

void ReadoutBias::validate() const {
  if (!(epsilon >= 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("readout bias eps must lie in [0, 0.5)");
  }
}

std::vector<double> apply_readout_bias(std::span<const double> p_one, const ReadoutBias& bias) {
  bias.validate();
  const double f10 = bias.flip_one_to_zero();
  const double f01 = bias.flip_zero_to_one();
  std::vector<double> out(p_one.size());
  for (std::size_t i = 0; i < p_one.size(); ++i) {
    out[i] = p_one[i] * (1.0 - f10) + (1.0 - p_one[i]) * f01;
  }
  return out;
}

std::vector<double> apply_readout_bias_joint(std::span<const double> probs, const ReadoutBias& bias,
                                             std::uint64_t bit_mask) {
  bias.validate();
  if (probs.empty() || !std::has_single_bit(probs.size())) {
    throw std::invalid_argument("apply_readout_bias_joint: size must be a power of two");
  }
  std::vector<double> out(probs.begin(), probs.end());
  if (bias.is_zero()) return out;
  const double f10 = bias.flip_one_to_zero();
  const double f01 = bias.flip_zero_to_one();
  const auto n = static_cast<unsigned>(std::countr_zero(probs.size()));
  // One bit at a time: the flips are independent, so the 2x2 confusion
  // matrices compose as a tensor product.
  for (unsigned q = 0; q < n; ++q) {
    if (((bit_mask >> q) & 1) == 0) continue;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t b = 0; b < out.size(); ++b) {
      if (b & bit) continue;
      const double p0 = out[b];
      const double p1 = out[b | bit];
      out[b] = p0 * (1.0 - f01) + p1 * f10;
      out[b | bit] = p1 * (1.0 - f10) + p0 * f01;
    }
  }
  return out;
}

int biased_bit(int bit, const ReadoutBias& bias, ShotRng& rng) {
  if (bias.is_zero()) return bit;
  const double flip = bit ? bias.flip_one_to_zero() : bias.flip_zero_to_one();
  if (flip == 0.0) return bit;
  return rng.bernoulli(flip) ? 1 - bit : bit;
}

BiasPredictions bias_model_predictions(double eps, unsigned l_a) {
  ReadoutBias{eps, BiasVariant::asymmetric}.validate();
  const double up = 0.5 + eps;
  const double down = 0.5 - eps;
  BiasPredictions out;
  out.neg_log_s2_approx = l_a * (std::numbers::ln2 - 4.0 * eps);
  out.neg_log_s2_exact = -static_cast<double>(l_a) * std::log(up * up + 2.0 * up * down - down * down);
  out.sector_gap = std::pow(2.0 * eps, static_cast<double>(l_a));
  return out;
}

}  // namespace sptprobe
