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

#include <span>

#include "sptprobe/circuits/circuit.hpp"
#include "sptprobe/core/types.hpp"

namespace sptprobe {

/// Sample mean and standard error (sample standard deviation / sqrt(N)).
/// A single value has standard error 0. Throws std::invalid_argument when empty.
Estimate mean_estimate(std::span<const double> values);

/// Purity Tr[rho_A^2] from swap_test_circuit records (2L bits, pair i on bits
/// i and L+i). Per shot: prod_{i < l_a} s_i with s_i = -1 iff the pair read
/// (1,1). Throws std::invalid_argument if the width is odd or l_a is not in
/// 1..L.
Estimate estimate_S2_from_shots(const ShotRecord& rec, unsigned l_a);

/// Tr[rho_A P_A] from the parity-frame probability records: mean of
/// (-1)^{popcount(bits 0..l_a-1)}.
Estimate estimate_parity_from_shots(const ShotRecord& prob, unsigned l_a);

/// Tr[rho_A^2 P_A] from modified_swap_test_circuit records: mean of the
/// product of decoded pair eigenvalues. The standard error refers to the real
/// part; `imag` is the mean imaginary part.
struct ComplexEstimate {
  Estimate real;
  double imag = 0.0;
};
ComplexEstimate estimate_trace_rho2_p_from_shots(const ShotRecord& modified, unsigned l_a);

struct ResolvedEstimate {
  Estimate s1_plus, s1_minus;
  Estimate s2_plus, s2_minus;
  Estimate s2;
  /// Re Tr[rho_A^2 P_A] with its imaginary part as a symmetry diagnostic.
  ComplexEstimate trace_rho2_p;
};

/// S~1(+/-) = (1 +/- <P_A>)/2 and S~2(+/-) = (S2 +/- Re Tr[rho^2 P_A])/2.
/// Standard errors combine the independent records in quadrature. Throws
/// std::invalid_argument when the record widths disagree with one chain
/// length or l_a is out of range.
ResolvedEstimate estimate_resolved_from_shots(const ShotRecord& plain, const ShotRecord& modified,
                                              const ShotRecord& prob, unsigned l_a);

}  // namespace sptprobe
