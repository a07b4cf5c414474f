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

// Inner loops over 2^n amplitudes. Every kernel has a scalar reference
// implementation; the AVX2 table is selected at runtime when the CPU supports
// it and must agree with the scalar table to rounding error.
//
// Mixed states reuse the same kernels: a column-major 2^n x 2^n matrix is a
// 2n-qubit vector whose low n bits index the row and high n bits the column.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "sptprobe/core/types.hpp"

namespace sptprobe::kernels {

/// Row-major 2x2 matrix.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 matrix; local index = bit(q0) | bit(q1) << 1.
using Mat4 = std::array<Complex, 16>;

/// Action of a Pauli string on basis states:
///   P|b> = coeff * (-1)^popcount(b & z) |b ^ x>.
struct PauliMask {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  Complex coeff{1.0, 0.0};
};

struct KernelTable {
  std::string_view name;

  void (*apply_1q)(std::span<Complex> amps, unsigned q, const Mat2& m);
  void (*apply_2q)(std::span<Complex> amps, unsigned q0, unsigned q1, const Mat4& m);
  /// amps <- (cos(theta) I + i sin(theta) P) amps.
  void (*apply_pauli_rotation)(std::span<Complex> amps, const PauliMask& p, double theta);
  double (*norm_squared)(std::span<const Complex> amps);
  /// Sum of |a_b|^2 over basis states with bit q set.
  double (*probability_one)(std::span<const Complex> amps, unsigned q);
  /// <a| P |a>.
  Complex (*pauli_expectation)(std::span<const Complex> amps, const PauliMask& p);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// The table used by the simulator. AVX2 when available, unless the
/// environment variable SPTPROBE_KERNELS=scalar forces the reference path.
const KernelTable& active_kernels();

/// Generic dense k-qubit matrix (row-major, 2^k x 2^k, local index bit j =
/// targets[j]). Scalar only; used for k > 2 and arbitrary Kraus operators.
void apply_matrix(std::span<Complex> amps, std::span<const unsigned> targets,
                  std::span<const Complex> matrix);

/// Index with a zero bit inserted at position q.
constexpr std::size_t insert_zero_bit(std::size_t k, unsigned q) {
  const std::size_t low = k & ((std::size_t{1} << q) - 1);
  return ((k >> q) << (q + 1)) | low;
}

}  // namespace sptprobe::kernels
