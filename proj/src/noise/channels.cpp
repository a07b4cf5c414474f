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

#include "sptprobe/noise/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sptprobe/qsim/gate.hpp"

namespace sptprobe {
namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probability must lie in [0, 1]");
  }
}

}  // namespace

KrausChannel dephasing_channel(double p) {
  check_probability(p, "dephasing_channel");
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return KrausChannel({std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_matrix(Pauli::Z)},
                      "dephasing");
}

KrausChannel lowering_depolarizing_channel(double p) {
  check_probability(p, "lowering_depolarizing_channel");
  using namespace std::complex_literals;
  const double s = std::sqrt(1.0 - p);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd z = pauli_matrix(Pauli::Z);
  const Eigen::Matrix2cd k1 = ((1.0 + s) * id - (1.0 - s) * z) / 2.0;
  const Eigen::Matrix2cd sigma_minus = (pauli_matrix(Pauli::X) - 1i * pauli_matrix(Pauli::Y)) / 2.0;
  return KrausChannel({k1, std::sqrt(p) * sigma_minus}, "depolarizing");
}

KrausChannel amplitude_damping_channel(double gamma) {
  check_probability(gamma, "amplitude_damping_channel");
  Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
  k1(0, 1) = std::sqrt(gamma);
  return KrausChannel({k0, k1}, "amplitude_damping");
}

KrausChannel readout_bias_channel(double eps, char basis) {
  if (!(eps >= 0.0 && eps < 0.5)) {
    throw std::invalid_argument("readout_bias_channel: eps must lie in [0, 0.5)");
  }
  // R rotates the measured basis onto Z: X via H, Y via H S^dagger.
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(2, 2);
  switch (basis) {
    case 'Z': break;
    case 'X': r = Gate::h(0).matrix(); break;
    case 'Y': r = Gate::h(0).matrix() * Gate::sdg(0).matrix(); break;
    default: throw std::invalid_argument("readout_bias_channel: basis must be X, Y or Z");
  }
  const KrausChannel damp = amplitude_damping_channel(2.0 * eps);
  std::vector<Eigen::MatrixXcd> ops;
  for (const auto& k : damp.operators()) ops.push_back(r.adjoint() * k * r);
  return KrausChannel(std::move(ops), std::string("readout_bias_") + basis);
}

const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::none: return "none";
    case ChannelKind::dephasing: return "dephasing";
    case ChannelKind::lowering_depolarizing: return "depolarizing";
    case ChannelKind::amplitude_damping: return "amplitude_damping";
  }
  return "?";
}

ChannelKind parse_channel_kind(std::string_view text) {
  if (text == "none") return ChannelKind::none;
  if (text == "dephasing") return ChannelKind::dephasing;
  if (text == "depolarizing") return ChannelKind::lowering_depolarizing;
  if (text == "amplitude_damping") return ChannelKind::amplitude_damping;
  throw std::invalid_argument("unknown channel kind '" + std::string(text) + "'");
}

}  // namespace sptprobe
