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

#include "sptprobe/symmetry/projector.hpp"

#include <bit>
#include <stdexcept>

#include "sptprobe/qsim/ops.hpp"

namespace sptprobe {
namespace {

PauliString unit_phase(const PauliString& p) { return p.times_phase((4 - p.phase_exponent()) % 4); }

}  // namespace

SymmetryAction::SymmetryAction(const AbelianGroup& group, std::vector<PauliString> operators)
    : group_(group), ops_(std::move(operators)) {
  if (ops_.size() != group_.order()) {
    throw std::invalid_argument("SymmetryAction: need one operator per group element");
  }
  for (const auto& p : ops_) {
    if (p.n_sites() != ops_.front().n_sites()) {
      throw std::invalid_argument("SymmetryAction: operators act on different site counts");
    }
  }
  for (unsigned g = 0; g < ops_.size(); ++g) {
    for (unsigned h = 0; h < ops_.size(); ++h) {
      if (!ops_[g].commutes_with(ops_[h])) {
        throw std::invalid_argument("SymmetryAction: operators do not commute");
      }
      if (ops_[g] * ops_[h] != ops_[group_.multiply(g, h)]) {
        throw std::invalid_argument("SymmetryAction: U(g)U(h) != U(gh)");
      }
    }
  }
}

SymmetryAction SymmetryAction::z2(const PauliString& p) {
  return SymmetryAction(AbelianGroup::cyclic(2), {PauliString(p.n_sites()), p});
}

SymmetryAction SymmetryAction::z2xz2(const PauliString& a, const PauliString& b) {
  const auto z2 = AbelianGroup::cyclic(2);
  return SymmetryAction(AbelianGroup::product(z2, z2), {PauliString(a.n_sites()), a, b, a * b});
}

SectorProjector::SectorProjector(const SymmetryAction& action, unsigned k)
    : k_(k), n_(action.n_sites()) {
  const AbelianGroup& g = action.group();
  if (k >= g.order()) throw std::out_of_range("SectorProjector: sector index out of range");
  const double inv = 1.0 / g.order();
  for (unsigned e = 0; e < g.order(); ++e) {
    const PauliString& u = action(e);
    const Complex c = inv * g.character(k, e) * u.phase();
    PauliString key = unit_phase(u);
    bool merged = false;
    for (auto& [coeff, s] : terms_) {
      if (s == key) {
        coeff += c;
        merged = true;
        break;
      }
    }
    if (!merged) terms_.emplace_back(c, std::move(key));
  }
  std::erase_if(terms_, [](const auto& t) { return std::abs(t.first) < 1e-15; });
}

Eigen::MatrixXcd SectorProjector::dense() const {
  if (n_ > kMaxDenseSites) throw std::length_error("SectorProjector: too many sites to densify");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [c, p] : terms_) out += c * pauli_dense(p);
  return out;
}

Complex SectorProjector::expectation(const MixedState& rho) const {
  Complex acc{};
  for (const auto& [c, p] : terms_) acc += c * pauli_expectation(rho, p);
  return acc;
}

Complex SectorProjector::expectation(const PureState& psi) const {
  Complex acc{};
  for (const auto& [c, p] : terms_) acc += c * pauli_expectation(psi, p);
  return acc;
}

Eigen::MatrixXcd pauli_dense(const PauliString& p) {
  const auto dim = std::size_t{1} << p.n_sites();
  const kernels::PauliMask m = p.mask();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const Complex v = (std::popcount(b & m.z) & 1) ? -m.coeff : m.coeff;
    out(static_cast<Eigen::Index>(b ^ m.x), static_cast<Eigen::Index>(b)) = v;
  }
  return out;
}

}  // namespace sptprobe
