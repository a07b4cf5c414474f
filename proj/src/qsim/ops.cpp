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

#include "sptprobe/qsim/ops.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sptprobe/kernels/kernels.hpp"

namespace sptprobe {
namespace {

void check_targets(std::span<const Qubit> targets, unsigned n) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= n) {
      throw std::out_of_range("target qubit " + std::to_string(targets[i]) + " out of range for " +
                              std::to_string(n) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[j] == targets[i]) throw std::invalid_argument("repeated target qubit");
    }
  }
}

void check_support(const PauliString& p, unsigned n) {
  const std::uint64_t used = p.x_mask() | p.z_mask();
  if (n < 64 && (used >> n) != 0) throw std::out_of_range("Pauli string acts outside the state");
}

kernels::Mat2 to_mat2(const Eigen::MatrixXcd& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

kernels::Mat4 to_mat4(const Eigen::MatrixXcd& m) {
  kernels::Mat4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[4 * r + c] = m(r, c);
  }
  return out;
}

// Applies a dense operator to `amps` with local index bit j = targets[j].
void apply_dense(std::span<Complex> amps, std::span<const Qubit> targets,
                 const Eigen::MatrixXcd& m) {
  const auto& k = kernels::active_kernels();
  if (targets.size() == 1) {
    k.apply_1q(amps, targets[0], to_mat2(m));
  } else if (targets.size() == 2) {
    k.apply_2q(amps, targets[0], targets[1], to_mat4(m));
  } else {
    // apply_matrix wants row-major storage.
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
    kernels::apply_matrix(amps, targets, {rm.data(), static_cast<std::size_t>(rm.size())});
  }
}

std::vector<Qubit> shifted(std::span<const Qubit> targets, unsigned by) {
  std::vector<Qubit> out(targets.begin(), targets.end());
  for (Qubit& q : out) q += by;
  return out;
}

// Maps a compact index over `sites` to a full index with those bits set.
std::vector<std::size_t> scatter_table(const std::vector<Qubit>& sites) {
  std::vector<std::size_t> table(std::size_t{1} << sites.size());
  for (std::size_t a = 0; a < table.size(); ++a) {
    std::size_t full = 0;
    for (std::size_t j = 0; j < sites.size(); ++j) {
      if ((a >> j) & 1) full |= std::size_t{1} << sites[j];
    }
    table[a] = full;
  }
  return table;
}

std::vector<Qubit> normalize_keep(std::vector<Qubit> keep, unsigned n) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep-set is empty");
  check_targets(keep, n);
  std::sort(keep.begin(), keep.end());
  if (keep.size() > kDefaultMaxMixedQubits + 2) {
    throw std::length_error("partial_trace: reduced state too large");
  }
  return keep;
}

std::vector<Qubit> complement(const std::vector<Qubit>& keep, unsigned n) {
  std::vector<Qubit> rest;
  for (Qubit q = 0; q < n; ++q) {
    if (!std::binary_search(keep.begin(), keep.end(), q)) rest.push_back(q);
  }
  return rest;
}

}  // namespace

void apply_gate(PureState& psi, const Gate& g) {
  check_targets(g.targets(), psi.n_qubits());
  if (g.kind() == GateKind::PauliExp) {
    apply_pauli_exponential(psi, g.pauli(), g.angle());
    return;
  }
  apply_dense(psi.mutable_amplitudes(), g.targets(), g.matrix());
}

void apply_gate(MixedState& rho, const Gate& g) {
  check_targets(g.targets(), rho.n_qubits());
  if (g.kind() == GateKind::PauliExp) {
    apply_pauli_exponential(rho, g.pauli(), g.angle());
    return;
  }
  apply_unitary(rho, g.targets(), g.matrix());
}

void apply_unitary(PureState& psi, std::span<const Qubit> targets, const Eigen::MatrixXcd& u) {
  check_targets(targets, psi.n_qubits());
  apply_dense(psi.mutable_amplitudes(), targets, u);
}

void apply_unitary(MixedState& rho, std::span<const Qubit> targets, const Eigen::MatrixXcd& u) {
  check_targets(targets, rho.n_qubits());
  // vec(U rho U^dagger): U on the row bits, conj(U) on the column bits.
  apply_dense(rho.as_vector(), targets, u);
  apply_dense(rho.as_vector(), shifted(targets, rho.n_qubits()), u.conjugate());
}

void apply_pauli_exponential(PureState& psi, const PauliString& p, double theta) {
  if (!p.is_hermitian()) throw std::invalid_argument("Pauli exponential needs a Hermitian string");
  check_support(p, psi.n_qubits());
  kernels::active_kernels().apply_pauli_rotation(psi.mutable_amplitudes(), p.mask(), theta);
}

void apply_pauli_exponential(MixedState& rho, const PauliString& p, double theta) {
  if (!p.is_hermitian()) throw std::invalid_argument("Pauli exponential needs a Hermitian string");
  const unsigned n = rho.n_qubits();
  check_support(p, n);
  const auto& k = kernels::active_kernels();
  const kernels::PauliMask m = p.mask();
  k.apply_pauli_rotation(rho.as_vector(), m, theta);
  // conj(exp(i theta P)) = exp(-i theta conj(P)).
  const kernels::PauliMask col{m.x << n, m.z << n, std::conj(m.coeff)};
  k.apply_pauli_rotation(rho.as_vector(), col, -theta);
}

void apply_kraus_channel(MixedState& rho, const KrausChannel& ch, std::span<const Qubit> targets) {
  if (targets.size() != ch.arity()) {
    throw std::invalid_argument("Kraus channel arity does not match target count");
  }
  check_targets(targets, rho.n_qubits());
  if (ch.operators().size() == 1) {
    apply_unitary(rho, targets, ch.operators().front());
    return;
  }
  const std::vector<Qubit> cols = shifted(targets, rho.n_qubits());
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rho.matrix().rows(), rho.matrix().cols());
  Eigen::MatrixXcd term;
  for (const auto& op : ch.operators()) {
    term = rho.matrix();
    std::span<Complex> v(term.data(), static_cast<std::size_t>(term.size()));
    apply_dense(v, targets, op);
    apply_dense(v, cols, op.conjugate());
    sum += term;
  }
  rho.mutable_matrix() = std::move(sum);
}

double probability_one(const PureState& psi, Qubit q) {
  if (q >= psi.n_qubits()) throw std::out_of_range("probability_one: qubit out of range");
  return kernels::active_kernels().probability_one(psi.amplitudes(), q);
}

double probability_one(const MixedState& rho, Qubit q) {
  if (q >= rho.n_qubits()) throw std::out_of_range("probability_one: qubit out of range");
  double p = 0.0;
  const auto& m = rho.matrix();
  for (Eigen::Index b = 0; b < m.rows(); ++b) {
    if ((b >> q) & 1) p += m(b, b).real();
  }
  return p;
}

double collapse(PureState& psi, Qubit q, int bit) {
  if (q >= psi.n_qubits()) throw std::out_of_range("collapse: qubit out of range");
  const double total = psi.norm_squared();
  if (total <= 0.0) throw std::runtime_error("collapse: state has zero norm");
  const double p1 = probability_one(psi, q) / total;
  const double p = bit ? p1 : 1.0 - p1;
  if (p <= 0.0) throw std::runtime_error("collapse: outcome has zero probability");
  const double scale = 1.0 / std::sqrt(p * total);
  auto amps = psi.mutable_amplitudes();
  const std::size_t want = bit ? 1 : 0;
  for (std::size_t b = 0; b < amps.size(); ++b) {
    amps[b] = ((b >> q) & 1) == want ? amps[b] * scale : Complex{};
  }
  return p;
}

double collapse(MixedState& rho, Qubit q, int bit) {
  if (q >= rho.n_qubits()) throw std::out_of_range("collapse: qubit out of range");
  const double total = rho.trace().real();
  if (total <= 0.0) throw std::runtime_error("collapse: state has zero trace");
  const double p1 = probability_one(rho, q) / total;
  const double p = bit ? p1 : 1.0 - p1;
  if (p <= 0.0) throw std::runtime_error("collapse: outcome has zero probability");
  auto& m = rho.mutable_matrix();
  const Eigen::Index want = bit ? 1 : 0;
  const double scale = 1.0 / (p * total);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const bool col_ok = ((c >> q) & 1) == want;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      m(r, c) = (col_ok && ((r >> q) & 1) == want) ? m(r, c) * scale : Complex{};
    }
  }
  return p;
}

Measurement measure_qubit(PureState& psi, Qubit q, ShotRng& rng) {
  const double total = psi.norm_squared();
  if (total <= 0.0) throw std::runtime_error("measure_qubit: state has zero norm");
  const double p1 = probability_one(psi, q) / total;
  const int bit = rng.uniform() < p1 ? 1 : 0;
  return {bit, collapse(psi, q, bit)};
}

Measurement measure_qubit(MixedState& rho, Qubit q, ShotRng& rng) {
  const double total = rho.trace().real();
  if (total <= 0.0) throw std::runtime_error("measure_qubit: state has zero trace");
  const double p1 = probability_one(rho, q) / total;
  const int bit = rng.uniform() < p1 ? 1 : 0;
  return {bit, collapse(rho, q, bit)};
}

std::vector<double> basis_probabilities(const PureState& psi) {
  std::vector<double> out(psi.dimension());
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = std::norm(psi[b]);
  return out;
}

std::vector<double> basis_probabilities(const MixedState& rho) {
  std::vector<double> out(rho.dimension());
  for (std::size_t b = 0; b < out.size(); ++b) {
    out[b] = std::max(0.0, rho.matrix()(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)).real());
  }
  return out;
}

PureState tensor_product(const PureState& low, const PureState& high, unsigned max_qubits) {
  const unsigned n = low.n_qubits() + high.n_qubits();
  PureState out(n, max_qubits);
  auto amps = out.mutable_amplitudes();
  const std::size_t dl = low.dimension();
  for (std::size_t h = 0; h < high.dimension(); ++h) {
    for (std::size_t l = 0; l < dl; ++l) amps[h * dl + l] = low[l] * high[h];
  }
  return out;
}

PureState tensor_copies(const PureState& psi, unsigned m, unsigned max_qubits) {
  if (m == 0) throw std::invalid_argument("tensor_copies: copy count must be >= 1");
  if (psi.n_qubits() * m > max_qubits) {
    throw std::length_error("tensor_copies: " + std::to_string(psi.n_qubits() * m) +
                            " qubits exceeds the configured maximum");
  }
  PureState out = psi;
  for (unsigned j = 1; j < m; ++j) out = tensor_product(out, psi, max_qubits);
  return out;
}

MixedState tensor_copies(const MixedState& rho, unsigned m, unsigned max_qubits) {
  if (m == 0) throw std::invalid_argument("tensor_copies: copy count must be >= 1");
  if (rho.n_qubits() * m > max_qubits) {
    throw std::length_error("tensor_copies: " + std::to_string(rho.n_qubits() * m) +
                            " qubits exceeds the configured maximum");
  }
  Eigen::MatrixXcd acc = rho.matrix();
  const Eigen::MatrixXcd& a = rho.matrix();
  for (unsigned j = 1; j < m; ++j) {
    // New copy occupies the high bits: result = a (x) acc in Kronecker order.
    const Eigen::Index d = acc.rows();
    Eigen::MatrixXcd next(d * a.rows(), d * a.cols());
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      for (Eigen::Index r = 0; r < a.rows(); ++r) next.block(r * d, c * d, d, d) = a(r, c) * acc;
    }
    acc = std::move(next);
  }
  return MixedState::adopt(std::move(acc));
}

Complex pauli_expectation(const PureState& psi, const PauliString& p) {
  check_support(p, psi.n_qubits());
  return kernels::active_kernels().pauli_expectation(psi.amplitudes(), p.mask());
}

Complex pauli_expectation(const MixedState& rho, const PauliString& p) {
  check_support(p, rho.n_qubits());
  // Tr[rho P] = sum_b coeff (-1)^{|b & z|} rho(b, b ^ x).
  const kernels::PauliMask m = p.mask();
  const auto& mat = rho.matrix();
  Complex acc{};
  for (Eigen::Index b = 0; b < mat.cols(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const Complex v = mat(b, static_cast<Eigen::Index>(ub ^ m.x));
    acc += (std::popcount(ub & m.z) & 1) ? -v : v;
  }
  return m.coeff * acc;
}

MixedState partial_trace(const PureState& psi, std::vector<Qubit> keep) {
  keep = normalize_keep(std::move(keep), psi.n_qubits());
  const std::vector<Qubit> rest = complement(keep, psi.n_qubits());
  const auto ka = scatter_table(keep);
  const auto ke = scatter_table(rest);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(ka.size()), static_cast<Eigen::Index>(ke.size()));
  for (std::size_t e = 0; e < ke.size(); ++e) {
    for (std::size_t a = 0; a < ka.size(); ++a) {
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(e)) = psi[ka[a] | ke[e]];
    }
  }
  const double norm = psi.norm_squared();
  return MixedState::adopt((m * m.adjoint()) / norm);
}

MixedState partial_trace(const MixedState& rho, std::vector<Qubit> keep) {
  keep = normalize_keep(std::move(keep), rho.n_qubits());
  const std::vector<Qubit> rest = complement(keep, rho.n_qubits());
  const auto ka = scatter_table(keep);
  const auto ke = scatter_table(rest);
  const auto dim = static_cast<Eigen::Index>(ka.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const auto& m = rho.matrix();
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      Complex acc{};
      for (std::size_t e : ke) {
        acc += m(static_cast<Eigen::Index>(ka[r] | e), static_cast<Eigen::Index>(ka[c] | e));
      }
      out(r, c) = acc;
    }
  }
  return MixedState::adopt(std::move(out));
}

}  // namespace sptprobe
