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

#include "sptprobe/entanglement/estimators.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sptprobe/circuits/library.hpp"

namespace sptprobe {
namespace {

unsigned pair_count(const ShotRecord& rec, unsigned l_a) {
  if (rec.n_bits == 0 || rec.n_bits % 2 != 0) {
    throw std::invalid_argument("two-copy record must have an even, nonzero width");
  }
  const unsigned L = rec.n_bits / 2;
  if (l_a < 1 || l_a > L) throw std::invalid_argument("subsystem size must be in 1..L");
  return L;
}

double combine(double a, double b) { return std::sqrt(a * a + b * b); }

}  // namespace

Estimate mean_estimate(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean_estimate: no values");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

Estimate estimate_S2_from_shots(const ShotRecord& rec, unsigned l_a) {
  const unsigned L = pair_count(rec, l_a);
  std::vector<double> v(rec.shots());
  for (std::size_t s = 0; s < rec.shots(); ++s) {
    const std::uint64_t row = rec.rows[s];
    const std::uint64_t mask = (std::uint64_t{1} << l_a) - 1;
    // Pairs reading (1,1) have both bit i and bit L+i set.
    const std::uint64_t both = row & (row >> L) & mask;
    v[s] = (std::popcount(both) & 1) ? -1.0 : 1.0;
  }
  return mean_estimate(v);
}

Estimate estimate_parity_from_shots(const ShotRecord& prob, unsigned l_a) {
  if (l_a < 1 || l_a > prob.n_bits) throw std::invalid_argument("subsystem size must be in 1..L");
  const std::uint64_t mask = (std::uint64_t{1} << l_a) - 1;
  std::vector<double> v(prob.shots());
  for (std::size_t s = 0; s < prob.shots(); ++s) {
    v[s] = (std::popcount(prob.rows[s] & mask) & 1) ? -1.0 : 1.0;
  }
  return mean_estimate(v);
}

ComplexEstimate estimate_trace_rho2_p_from_shots(const ShotRecord& modified, unsigned l_a) {
  const unsigned L = pair_count(modified, l_a);
  const auto& table = modified_swap_decode_table();
  std::vector<double> re(modified.shots());
  double im_sum = 0.0;
  for (std::size_t s = 0; s < modified.shots(); ++s) {
    Complex prod{1.0, 0.0};
    for (unsigned i = 0; i < l_a; ++i) {
      const unsigned code = static_cast<unsigned>(modified.bit(s, i)) |
                            (static_cast<unsigned>(modified.bit(s, L + i)) << 1);
      prod *= table[code];
    }
    re[s] = prod.real();
    im_sum += prod.imag();
  }
  ComplexEstimate out;
  out.real = mean_estimate(re);
  out.imag = re.empty() ? 0.0 : im_sum / static_cast<double>(re.size());
  return out;
}

ResolvedEstimate estimate_resolved_from_shots(const ShotRecord& plain, const ShotRecord& modified,
                                              const ShotRecord& prob, unsigned l_a) {
  const unsigned L = pair_count(plain, l_a);
  if (modified.n_bits != plain.n_bits || prob.n_bits != L) {
    throw std::invalid_argument("estimate_resolved_from_shots: records describe different chains");
  }
  ResolvedEstimate out;
  const Estimate parity = estimate_parity_from_shots(prob, l_a);
  out.s1_plus = {(1.0 + parity.value) / 2.0, parity.std_error / 2.0};
  out.s1_minus = {(1.0 - parity.value) / 2.0, parity.std_error / 2.0};
  out.s2 = estimate_S2_from_shots(plain, l_a);
  out.trace_rho2_p = estimate_trace_rho2_p_from_shots(modified, l_a);
  const double se = combine(out.s2.std_error, out.trace_rho2_p.real.std_error) / 2.0;
  out.s2_plus = {(out.s2.value + out.trace_rho2_p.real.value) / 2.0, se};
  out.s2_minus = {(out.s2.value - out.trace_rho2_p.real.value) / 2.0, se};
  return out;
}

}  // namespace sptprobe
