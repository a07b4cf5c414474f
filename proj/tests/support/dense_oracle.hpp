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

// Brute-force reference simulator for tests: every operator is materialized
// on the full 2^n space with Kronecker products and applied by dense matrix
// multiplication. Gate matrices are written out here independently of the
// library so a shared mistake cannot hide.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "sptprobe/circuits/circuit.hpp"
#include "sptprobe/qsim/pauli_string.hpp"

namespace sptprobe::testing::dense {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using namespace std::complex_literals;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat letter(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -1i, 1i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    case 'H': m << 1, 1, 1, -1; m /= std::sqrt(2.0); break;
    case 'S': m << 1, 0, 0, 1i; break;
    case 's': m << 1, 0, 0, -1i; break;  // S^dagger
    case '0': m << 1, 0, 0, 0; break;    // |0><0|
    case '1': m << 0, 0, 0, 1; break;    // |1><1|
    default: throw std::invalid_argument("dense::letter");
  }
  return m;
}

/// Site k is bit k, so site 0 is the rightmost Kronecker factor.
inline Mat product(const std::vector<Mat>& per_site) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& m : per_site) out = kron(m, out);
  return out;
}

inline Mat embed(const Mat& u, unsigned q, unsigned n) {
  std::vector<Mat> f(n, letter('I'));
  f[q] = u;
  return product(f);
}

/// |0><0|_c (x) I + |1><1|_c (x) U_t.
inline Mat controlled(const Mat& u, unsigned c, unsigned t, unsigned n) {
  std::vector<Mat> a(n, letter('I'));
  std::vector<Mat> b(n, letter('I'));
  a[c] = letter('0');
  b[c] = letter('1');
  b[t] = u;
  return product(a) + product(b);
}

inline Mat pauli(const PauliString& p, unsigned n) {
  std::vector<Mat> f(n, letter('I'));
  for (unsigned s = 0; s < p.n_sites(); ++s) f[s] = letter(to_char(p.at(s)));
  return p.phase() * product(f);
}

inline Mat gate_operator(const Gate& g, unsigned n) {
  const auto& t = g.targets();
  switch (g.kind()) {
    case GateKind::H: return embed(letter('H'), t[0], n);
    case GateKind::X: return embed(letter('X'), t[0], n);
    case GateKind::Y: return embed(letter('Y'), t[0], n);
    case GateKind::Z: return embed(letter('Z'), t[0], n);
    case GateKind::S: return embed(letter('S'), t[0], n);
    case GateKind::Sdg: return embed(letter('s'), t[0], n);
    case GateKind::CZ: return controlled(letter('Z'), t[0], t[1], n);
    case GateKind::CNOT: return controlled(letter('X'), t[0], t[1], n);
    case GateKind::CH: return controlled(letter('H'), t[0], t[1], n);
    case GateKind::PauliExp: {
      const auto dim = Eigen::Index{1} << n;
      return std::cos(g.angle()) * Mat::Identity(dim, dim) +
             1i * std::sin(g.angle()) * pauli(g.pauli(), n);
    }
  }
  throw std::logic_error("dense::gate_operator");
}

/// Unitary part of a circuit (measurements and conditionals skipped).
inline Vec run(const Circuit& c) {
  const unsigned n = c.n_qubits();
  Vec psi = Vec::Zero(Eigen::Index{1} << n);
  psi(0) = 1;
  for (const auto& ins : c.instructions()) {
    if (const auto* g = std::get_if<Gate>(&ins)) psi = gate_operator(*g, n) * psi;
  }
  return psi;
}

inline Mat density(const Vec& psi) { return psi * psi.adjoint(); }

inline Mat partial_trace(const Mat& rho, const std::vector<unsigned>& keep, unsigned n) {
  std::vector<bool> kept(n, false);
  for (unsigned q : keep) kept[q] = true;
  const auto dk = Eigen::Index{1} << keep.size();
  Mat out = Mat::Zero(dk, dk);
  const auto dim = Eigen::Index{1} << n;
  auto compress = [&](Eigen::Index b) {
    Eigen::Index a = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) a |= ((b >> keep[j]) & 1) << j;
    return a;
  };
  auto env = [&](Eigen::Index b) {
    Eigen::Index e = 0;
    for (unsigned q = 0; q < n; ++q) {
      if (!kept[q]) e |= b & (Eigen::Index{1} << q);
    }
    return e;
  };
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (env(i) == env(j)) out(compress(i), compress(j)) += rho(i, j);
    }
  }
  return out;
}

/// Local k-qubit operator (local bit j = targets[j]) lifted to n qubits.
inline Mat lift(const Mat& local, const std::vector<unsigned>& targets, unsigned n) {
  const auto dim = Eigen::Index{1} << n;
  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index lc = 0;
    Eigen::Index rest = col;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      lc |= ((col >> targets[j]) & 1) << j;
      rest &= ~(Eigen::Index{1} << targets[j]);
    }
    for (Eigen::Index lr = 0; lr < local.rows(); ++lr) {
      Eigen::Index row = rest;
      for (std::size_t j = 0; j < targets.size(); ++j) row |= ((lr >> j) & 1) << targets[j];
      out(row, col) += local(lr, lc);
    }
  }
  return out;
}

inline Mat apply_kraus(const Mat& rho, const std::vector<Mat>& ops,
                       const std::vector<unsigned>& targets, unsigned n) {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& k : ops) {
    const Mat full = lift(k, targets, n);
    out += full * rho * full.adjoint();
  }
  return out;
}

}  // namespace sptprobe::testing::dense
