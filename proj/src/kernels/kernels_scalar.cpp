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

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sptprobe/kernels/kernels.hpp"

namespace sptprobe::kernels {
namespace {

// Plain complex product; std::complex operator* goes through the
// NaN-recovering libgcc path.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

inline double parity_sign(std::uint64_t b, std::uint64_t z) {
  return (std::popcount(b & z) & 1) ? -1.0 : 1.0;
}

void apply_1q_scalar(std::span<Complex> amps, unsigned q, const Mat2& m) {
  const std::size_t dim = amps.size();
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = mul(m[0], a0) + mul(m[1], a1);
      amps[i + stride] = mul(m[2], a0) + mul(m[3], a1);
    }
  }
}

void apply_2q_scalar(std::span<Complex> amps, unsigned q0, unsigned q1, const Mat4& m) {
  const std::size_t quarter = amps.size() / 4;
  const unsigned lo = q0 < q1 ? q0 : q1;
  const unsigned hi = q0 < q1 ? q1 : q0;
  const std::size_t s0 = std::size_t{1} << q0;
  const std::size_t s1 = std::size_t{1} << q1;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t base = insert_zero_bit(insert_zero_bit(k, lo), hi);
    const std::size_t idx[4] = {base, base | s0, base | s1, base | s0 | s1};
    Complex v[4];
    for (int j = 0; j < 4; ++j) v[j] = amps[idx[j]];
    for (int r = 0; r < 4; ++r) {
      Complex acc{};
      for (int c = 0; c < 4; ++c) acc += mul(m[4 * r + c], v[c]);
      amps[idx[r]] = acc;
    }
  }
}

void apply_pauli_rotation_scalar(std::span<Complex> amps, const PauliMask& p, double theta) {
  const std::size_t dim = amps.size();
  const double c = std::cos(theta);
  const Complex is = mul(Complex{0.0, std::sin(theta)}, p.coeff);
  if (p.x == 0) {
    for (std::size_t b = 0; b < dim; ++b) {
      amps[b] = mul(amps[b], Complex{c, 0.0} + is * parity_sign(b, p.z));
    }
    return;
  }
  const unsigned top = static_cast<unsigned>(std::bit_width(p.x) - 1);
  for (std::size_t k = 0; k < dim / 2; ++k) {
    const std::size_t b = insert_zero_bit(k, top);
    const std::size_t partner = b ^ p.x;
    const Complex a0 = amps[b];
    const Complex a1 = amps[partner];
    amps[b] = c * a0 + mul(is * parity_sign(partner, p.z), a1);
    amps[partner] = c * a1 + mul(is * parity_sign(b, p.z), a0);
  }
}

double norm_squared_scalar(std::span<const Complex> amps) {
  double acc = 0.0;
  for (const Complex& a : amps) acc += a.real() * a.real() + a.imag() * a.imag();
  return acc;
}

double probability_one_scalar(std::span<const Complex> amps, unsigned q) {
  const std::size_t dim = amps.size();
  const std::size_t stride = std::size_t{1} << q;
  double acc = 0.0;
  for (std::size_t base = stride; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      acc += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
  }
  return acc;
}

Complex pauli_expectation_scalar(std::span<const Complex> amps, const PauliMask& p) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const std::size_t partner = b ^ p.x;
    const double s = parity_sign(partner, p.z);
    const Complex a = amps[b];
    const Complex w = amps[partner];
    // conj(a) * w
    re += s * (a.real() * w.real() + a.imag() * w.imag());
    im += s * (a.real() * w.imag() - a.imag() * w.real());
  }
  return mul(p.coeff, Complex{re, im});
}

constexpr KernelTable kScalarTable{
    "scalar",
    &apply_1q_scalar,
    &apply_2q_scalar,
    &apply_pauli_rotation_scalar,
    &norm_squared_scalar,
    &probability_one_scalar,
    &pauli_expectation_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

void apply_matrix(std::span<Complex> amps, std::span<const unsigned> targets,
                  std::span<const Complex> matrix) {
  const unsigned k = static_cast<unsigned>(targets.size());
  const std::size_t local = std::size_t{1} << k;
  if (matrix.size() != local * local) {
    throw std::invalid_argument("apply_matrix: matrix size does not match target count");
  }
  std::vector<unsigned> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> offsets(local, 0);
  for (std::size_t l = 0; l < local; ++l) {
    for (unsigned j = 0; j < k; ++j) {
      if ((l >> j) & 1) offsets[l] |= std::size_t{1} << targets[j];
    }
  }
  std::vector<Complex> in(local);
  const std::size_t blocks = amps.size() >> k;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    std::size_t base = blk;
    for (unsigned q : sorted) base = insert_zero_bit(base, q);
    for (std::size_t l = 0; l < local; ++l) in[l] = amps[base | offsets[l]];
    for (std::size_t r = 0; r < local; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < local; ++c) acc += mul(matrix[r * local + c], in[c]);
      amps[base | offsets[r]] = acc;
    }
  }
}

}  // namespace sptprobe::kernels
