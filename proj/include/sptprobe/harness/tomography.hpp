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

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sptprobe/circuits/circuit.hpp"
#include "sptprobe/circuits/library.hpp"
#include "sptprobe/core/types.hpp"

namespace sptprobe::harness {

/// Per-shot Pauli correction U = prod Z^{b_z} X^{b_x}, given by the record
/// bits that drive each factor. Only the parities matter for the frame sign.
struct PauliCorrection {
  std::vector<unsigned> z_bits;
  std::vector<unsigned> x_bits;

  /// The wire protocol: Z^{b0} X^{b1} Z^{b2} X^{b3}.
  static PauliCorrection wire() { return {{0, 2}, {1, 3}}; }
  static PauliCorrection none() { return {}; }

  /// Sign of U^dagger sigma_basis U for the given record row.
  int sign(std::uint64_t row, char basis) const;
};

struct TomographyResult {
  Estimate x, y, z;
  /// (I + x X + y Y + z Z) / 2 from the point estimates.
  Eigen::Matrix2cd rho;

  std::array<double, 3> bloch() const { return {x.value, y.value, z.value}; }
};

Eigen::Matrix2cd bloch_to_density(const std::array<double, 3>& r);

/// Single-qubit tomography from three records measured in the X, Y and Z
/// bases, with the outcome on bit `outcome_bit` and the correction applied
/// shot by shot. Throws std::invalid_argument when the shot counts differ or
/// are zero.
TomographyResult tomography(const ShotRecord& x, const ShotRecord& y, const ShotRecord& z,
                            unsigned outcome_bit, const PauliCorrection& correction);

/// Exact corrected expectation of the measured Pauli from an outcome
/// distribution over record rows.
double corrected_expectation(std::span<const double> distribution, char basis,
                             unsigned outcome_bit, const PauliCorrection& correction);

/// <psi|rho|psi> = (1 + r . n) / 2 with the standard error propagated from
/// the three independent expectations.
Estimate corrected_fidelity(const TomographyResult& t, InputState psi);
double fidelity(const std::array<double, 3>& r, InputState psi);

}  // namespace sptprobe::harness
