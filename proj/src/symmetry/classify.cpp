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

#include "sptprobe/symmetry/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "sptprobe/qsim/ops.hpp"
#include "sptprobe/symmetry/projector.hpp"

namespace sptprobe {
namespace {

double max_commutator(const MixedState& rho_a, const std::vector<PauliString>& t_ops) {
  double worst = 0.0;
  for (const auto& t : t_ops) worst = std::max(worst, symmetry_commutator_norm(rho_a, t));
  return worst;
}

MixedState reduce(const MixedState& rho, const std::vector<Qubit>& subsystem) {
  if (subsystem.size() == rho.n_qubits()) {
    std::vector<Qubit> sorted = subsystem;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Qubit> all(rho.n_qubits());
    std::iota(all.begin(), all.end(), 0u);
    if (sorted == all) return rho;
  }
  return partial_trace(rho, subsystem);
}

}  // namespace

const char* to_string(NoiseClass c) {
  return c == NoiseClass::preserving ? "preserving" : "breaking";
}

double symmetry_commutator_norm(const MixedState& rho, const PauliString& t) {
  if (!t.is_hermitian()) throw std::invalid_argument("commutator test needs a Hermitian operator");
  if (t.n_sites() != rho.n_qubits()) {
    throw std::invalid_argument("commutator test: operator and state sizes differ");
  }
  // Each row and column of T has one nonzero, so both products are gathers.
  const kernels::PauliMask m = t.mask();
  const auto& a = rho.matrix();
  double worst = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    // <c^x|T|c> = coeff (-1)^{|c&z|}.
    const Complex right = (std::popcount(uc & m.z) & 1) ? -m.coeff : m.coeff;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      // <r|T = coeff (-1)^{|(r^x)&z|} <r^x|.
      const Complex left = (std::popcount((ur ^ m.x) & m.z) & 1) ? -m.coeff : m.coeff;
      const Complex tr = left * a(static_cast<Eigen::Index>(ur ^ m.x), c);
      const Complex rt = a(r, static_cast<Eigen::Index>(uc ^ m.x)) * right;
      worst = std::max(worst, std::abs(tr - rt));
    }
  }
  return worst;
}

Classification classify_channel(const std::vector<ChannelApplication>& applications,
                                const ClassificationContext& ctx) {
  if (ctx.t_ops.empty()) throw std::invalid_argument("classify_channel: no T_A operators");
  const double before = max_commutator(reduce(ctx.rho, ctx.subsystem), ctx.t_ops);
  if (before > ctx.tolerance) {
    throw std::domain_error("classify_channel: input state does not commute with T_A");
  }
  MixedState rho = ctx.rho;
  for (const auto& app : applications) apply_kraus_channel(rho, app.channel, app.targets);
  const MixedState rho_a = reduce(rho, ctx.subsystem);
  Classification out;
  out.witness = max_commutator(rho_a, ctx.t_ops);
  out.verdict = out.witness <= ctx.tolerance ? NoiseClass::preserving : NoiseClass::breaking;
  if (ctx.sector_operator) out.sector_gap = std::abs(pauli_expectation(rho_a, *ctx.sector_operator));
  return out;
}

Classification classify_channel(const KrausChannel& channel, const ClassificationContext& ctx) {
  const unsigned n = ctx.rho.n_qubits();
  std::vector<ChannelApplication> apps;
  if (channel.arity() == 1) {
    for (Qubit q = 0; q < n; ++q) apps.push_back({channel, {q}});
  } else if (channel.arity() == n) {
    std::vector<Qubit> all(n);
    std::iota(all.begin(), all.end(), 0u);
    apps.push_back({channel, all});
  } else {
    throw std::invalid_argument("classify_channel: give explicit targets for a " +
                                std::to_string(channel.arity()) + "-qubit channel");
  }
  return classify_channel(apps, ctx);
}

}  // namespace sptprobe
