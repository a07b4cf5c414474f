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

#include "sptprobe/harness/tomography.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "sptprobe/entanglement/estimators.hpp"

namespace sptprobe::harness {
namespace {

int parity(std::uint64_t row, const std::vector<unsigned>& bits) {
  int p = 0;
  for (unsigned b : bits) p ^= static_cast<int>((row >> b) & 1);
  return p;
}

Estimate basis_estimate(const ShotRecord& rec, char basis, unsigned outcome_bit,
                        const PauliCorrection& correction) {
  if (outcome_bit >= rec.n_bits) throw std::invalid_argument("tomography: outcome bit out of range");
  std::vector<double> v(rec.shots());
  for (std::size_t s = 0; s < rec.shots(); ++s) {
    const int m = 1 - 2 * rec.bit(s, outcome_bit);
    v[s] = m * correction.sign(rec.rows[s], basis);
  }
  return mean_estimate(v);
}

}  // namespace

int PauliCorrection::sign(std::uint64_t row, char basis) const {
  // Z anticommutes with X and Y, X with Y and Z.
  int flip = 0;
  if (basis == 'X' || basis == 'Y') flip ^= parity(row, z_bits);
  if (basis == 'Z' || basis == 'Y') flip ^= parity(row, x_bits);
  if (basis != 'X' && basis != 'Y' && basis != 'Z') throw std::invalid_argument("basis must be X, Y or Z");
  return flip ? -1 : 1;
}

Eigen::Matrix2cd bloch_to_density(const std::array<double, 3>& r) {
  const Complex i{0, 1};
  Eigen::Matrix2cd m;
  m << 1 + r[2], r[0] - i * r[1],
       r[0] + i * r[1], 1 - r[2];
  return m / 2.0;
}

TomographyResult tomography(const ShotRecord& x, const ShotRecord& y, const ShotRecord& z,
                            unsigned outcome_bit, const PauliCorrection& correction) {
  if (x.shots() == 0 || x.shots() != y.shots() || x.shots() != z.shots()) {
    throw std::invalid_argument("tomography: the three bases need equal, nonzero shot counts");
  }
  TomographyResult t;
  t.x = basis_estimate(x, 'X', outcome_bit, correction);
  t.y = basis_estimate(y, 'Y', outcome_bit, correction);
  t.z = basis_estimate(z, 'Z', outcome_bit, correction);
  t.rho = bloch_to_density(t.bloch());
  return t;
}

double corrected_expectation(std::span<const double> distribution, char basis,
                             unsigned outcome_bit, const PauliCorrection& correction) {
  double e = 0.0;
  for (std::size_t row = 0; row < distribution.size(); ++row) {
    if (distribution[row] == 0.0) continue;
    const int m = 1 - 2 * static_cast<int>((row >> outcome_bit) & 1);
    e += distribution[row] * m * correction.sign(row, basis);
  }
  return e;
}

double fidelity(const std::array<double, 3>& r, InputState psi) {
  const auto n = bloch_vector(psi);
  return 0.5 * (1.0 + r[0] * n[0] + r[1] * n[1] + r[2] * n[2]);
}

Estimate corrected_fidelity(const TomographyResult& t, InputState psi) {
  const auto n = bloch_vector(psi);
  const double var = n[0] * n[0] * t.x.std_error * t.x.std_error +
                     n[1] * n[1] * t.y.std_error * t.y.std_error +
                     n[2] * n[2] * t.z.std_error * t.z.std_error;
  return {fidelity(t.bloch(), psi), 0.5 * std::sqrt(var)};
}

}  // namespace sptprobe::harness
