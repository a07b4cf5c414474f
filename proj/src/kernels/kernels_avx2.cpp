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

// AVX2 + FMA variants. One __m256d holds two complex<double> values laid out
// as [re0, im0, re1, im1].

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "avx2_table.hpp"

namespace sptprobe::kernels::detail {
namespace {

inline __m256d load2(const Complex* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(Complex* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

/// [a, b] -> [b, a] for the two complex lanes.
inline __m256d swap_lanes(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x01); }

/// [re, im] -> [im, re] within each complex lane.
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0x5); }

/// Complex product with the same coefficient in both lanes.
struct Broadcast {
  __m256d re;
  __m256d im;
  explicit Broadcast(Complex c) : re(_mm256_set1_pd(c.real())), im(_mm256_set1_pd(c.imag())) {}
};

inline __m256d cmul(__m256d v, const Broadcast& c) {
  return _mm256_fmaddsub_pd(v, c.re, _mm256_mul_pd(swap_re_im(v), c.im));
}

/// Complex product with a per-lane coefficient vector c = [c0, c1].
inline __m256d cmul_lanes(__m256d v, __m256d c) {
  const __m256d c_re = _mm256_movedup_pd(c);
  const __m256d c_im = _mm256_permute_pd(c, 0xF);
  return _mm256_fmaddsub_pd(v, c_re, _mm256_mul_pd(swap_re_im(v), c_im));
}

inline __m256d pack(Complex a, Complex b) {
  return _mm256_setr_pd(a.real(), a.imag(), b.real(), b.imag());
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double parity_sign(std::uint64_t b, std::uint64_t z) {
  return (std::popcount(b & z) & 1) ? -1.0 : 1.0;
}

void apply_1q_avx2(std::span<Complex> amps, unsigned q, const Mat2& m) {
  const std::size_t dim = amps.size();
  Complex* a = amps.data();
  if (dim < 2) return;
  if (q == 0) {
    // Pairs are adjacent: out = [m0, m3] * [a0, a1] + [m1, m2] * [a1, a0].
    const __m256d diag = pack(m[0], m[3]);
    const __m256d off = pack(m[1], m[2]);
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = load2(a + i);
      const __m256d out = _mm256_add_pd(cmul_lanes(v, diag), cmul_lanes(swap_lanes(v), off));
      store2(a + i, out);
    }
    return;
  }
  const std::size_t stride = std::size_t{1} << q;
  const Broadcast m0(m[0]), m1(m[1]), m2(m[2]), m3(m[3]);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      const __m256d v0 = load2(a + i);
      const __m256d v1 = load2(a + i + stride);
      store2(a + i, _mm256_add_pd(cmul(v0, m0), cmul(v1, m1)));
      store2(a + i + stride, _mm256_add_pd(cmul(v0, m2), cmul(v1, m3)));
    }
  }
}

void apply_2q_avx2(std::span<Complex> amps, unsigned q0, unsigned q1, const Mat4& m) {
  const unsigned lo = q0 < q1 ? q0 : q1;
  const unsigned hi = q0 < q1 ? q1 : q0;
  if (lo == 0) {
    // Bit 0 is a target, so consecutive amplitudes belong to the same group.
    scalar_kernels().apply_2q(amps, q0, q1, m);
    return;
  }
  Complex* a = amps.data();
  const std::size_t quarter = amps.size() / 4;
  const std::size_t s0 = std::size_t{1} << q0;
  const std::size_t s1 = std::size_t{1} << q1;
  const std::size_t off[4] = {0, s0, s1, s0 | s1};
  Broadcast coef[16] = {
      Broadcast(m[0]),  Broadcast(m[1]),  Broadcast(m[2]),  Broadcast(m[3]),
      Broadcast(m[4]),  Broadcast(m[5]),  Broadcast(m[6]),  Broadcast(m[7]),
      Broadcast(m[8]),  Broadcast(m[9]),  Broadcast(m[10]), Broadcast(m[11]),
      Broadcast(m[12]), Broadcast(m[13]), Broadcast(m[14]), Broadcast(m[15]),
  };
  for (std::size_t k = 0; k < quarter; k += 2) {
    const std::size_t base = insert_zero_bit(insert_zero_bit(k, lo), hi);
    __m256d v[4];
    for (int j = 0; j < 4; ++j) v[j] = load2(a + base + off[j]);
    for (int r = 0; r < 4; ++r) {
      __m256d acc = cmul(v[0], coef[4 * r]);
      acc = _mm256_add_pd(acc, cmul(v[1], coef[4 * r + 1]));
      acc = _mm256_add_pd(acc, cmul(v[2], coef[4 * r + 2]));
      acc = _mm256_add_pd(acc, cmul(v[3], coef[4 * r + 3]));
      store2(a + base + off[r], acc);
    }
  }
}

void apply_pauli_rotation_avx2(std::span<Complex> amps, const PauliMask& p, double theta) {
  const std::size_t dim = amps.size();
  if (dim < 4) {
    scalar_kernels().apply_pauli_rotation(amps, p, theta);
    return;
  }
  Complex* a = amps.data();
  const double c = std::cos(theta);
  const Complex is = Complex{0.0, std::sin(theta)} * p.coeff;
  const Complex plus = Complex{c, 0.0} + is;
  const Complex minus = Complex{c, 0.0} - is;
  const Broadcast cosb(Complex{c, 0.0});

  if (p.x == 0) {
    for (std::size_t b = 0; b < dim; b += 2) {
      const Complex f0 = parity_sign(b, p.z) > 0 ? plus : minus;
      const Complex f1 = parity_sign(b + 1, p.z) > 0 ? plus : minus;
      store2(a + b, cmul_lanes(load2(a + b), pack(f0, f1)));
    }
    return;
  }

  if (p.x == 1) {
    // Partners are the two lanes of one vector.
    for (std::size_t b = 0; b < dim; b += 2) {
      const __m256d v = load2(a + b);
      const __m256d k = pack(is * parity_sign(b + 1, p.z), is * parity_sign(b, p.z));
      store2(a + b, _mm256_add_pd(cmul(v, cosb), cmul_lanes(swap_lanes(v), k)));
    }
    return;
  }

  const unsigned top = static_cast<unsigned>(std::bit_width(p.x) - 1);
  const bool flips_low_bit = (p.x & 1) != 0;
  for (std::size_t k = 0; k < dim / 2; k += 2) {
    // top >= 1 here, so b and b + 1 are both in the lower half of their pair.
    const std::size_t b = insert_zero_bit(k, top);
    const std::size_t partner = b ^ p.x;
    const std::size_t partner_base = flips_low_bit ? partner - 1 : partner;
    const __m256d v0 = load2(a + b);
    __m256d v1 = load2(a + partner_base);
    if (flips_low_bit) v1 = swap_lanes(v1);
    // v1 lanes hold amplitudes at (b ^ x, (b + 1) ^ x).
    const std::size_t p0 = partner;
    const std::size_t p1 = (b + 1) ^ p.x;
    const __m256d k0 = pack(is * parity_sign(p0, p.z), is * parity_sign(p1, p.z));
    const __m256d k1 = pack(is * parity_sign(b, p.z), is * parity_sign(b + 1, p.z));
    const __m256d new0 = _mm256_add_pd(cmul(v0, cosb), cmul_lanes(v1, k0));
    __m256d new1 = _mm256_add_pd(cmul(v1, cosb), cmul_lanes(v0, k1));
    if (flips_low_bit) new1 = swap_lanes(new1);
    store2(a + b, new0);
    store2(a + partner_base, new1);
  }
}

double norm_squared_avx2(std::span<const Complex> amps) {
  const std::size_t dim = amps.size();
  const Complex* a = amps.data();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= dim; i += 4) {
    const __m256d v0 = load2(a + i);
    const __m256d v1 = load2(a + i + 2);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  double tail = 0.0;
  for (; i < dim; ++i) tail += std::norm(a[i]);
  return hsum(_mm256_add_pd(acc0, acc1)) + tail;
}

double probability_one_avx2(std::span<const Complex> amps, unsigned q) {
  const std::size_t dim = amps.size();
  const Complex* a = amps.data();
  if (dim < 2) return 0.0;
  __m256d acc = _mm256_setzero_pd();
  if (q == 0) {
    const __m256d upper = _mm256_setr_pd(0.0, 0.0, 1.0, 1.0);
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_mul_pd(load2(a + i), upper);
      acc = _mm256_fmadd_pd(v, v, acc);
    }
    return hsum(acc);
  }
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = stride; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      const __m256d v = load2(a + i);
      acc = _mm256_fmadd_pd(v, v, acc);
    }
  }
  return hsum(acc);
}

Complex pauli_expectation_avx2(std::span<const Complex> amps, const PauliMask& p) {
  const std::size_t dim = amps.size();
  if (dim < 2) return scalar_kernels().pauli_expectation(amps, p);
  const Complex* a = amps.data();
  const bool flips_low_bit = (p.x & 1) != 0;
  __m256d re_acc = _mm256_setzero_pd();
  __m256d im_acc = _mm256_setzero_pd();
  for (std::size_t b = 0; b < dim; b += 2) {
    const std::size_t partner = b ^ p.x;
    const __m256d va = load2(a + b);
    __m256d vw = load2(a + (flips_low_bit ? partner - 1 : partner));
    if (flips_low_bit) vw = swap_lanes(vw);
    const double s0 = parity_sign(partner, p.z);
    const double s1 = parity_sign((b + 1) ^ p.x, p.z);
    const __m256d sign = _mm256_setr_pd(s0, s0, s1, s1);
    // conj(a) * w: re = ar*wr + ai*wi, im = ar*wi - ai*wr
    re_acc = _mm256_fmadd_pd(_mm256_mul_pd(va, vw), sign, re_acc);
    im_acc = _mm256_fmadd_pd(_mm256_mul_pd(va, swap_re_im(vw)), sign, im_acc);
  }
  alignas(32) double im_parts[4];
  _mm256_store_pd(im_parts, im_acc);
  const Complex sum{hsum(re_acc), im_parts[0] - im_parts[1] + im_parts[2] - im_parts[3]};
  return p.coeff * sum;
}

constexpr KernelTable kAvx2Table{
    "avx2",
    &apply_1q_avx2,
    &apply_2q_avx2,
    &apply_pauli_rotation_avx2,
    &norm_squared_avx2,
    &probability_one_avx2,
    &pauli_expectation_avx2,
};

}  // namespace

const KernelTable& avx2_table() { return kAvx2Table; }

}  // namespace sptprobe::kernels::detail
