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

// Seeded generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "sptprobe/circuits/circuit.hpp"
#include "sptprobe/qsim/pauli_string.hpp"
#include "sptprobe/qsim/states.hpp"

namespace sptprobe::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  unsigned below(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }
  Complex complex_normal() { return {normal(), normal()}; }

  std::vector<Complex> amplitudes(unsigned n) {
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& x : a) {
      x = complex_normal();
      norm += std::norm(x);
    }
    for (auto& x : a) x /= std::sqrt(norm);
    return a;
  }

  PureState pure_state(unsigned n) { return PureState::from_amplitudes(amplitudes(n), 1e-9); }

  /// Random full-rank density matrix G G^dagger / Tr.
  MixedState mixed_state(unsigned n) {
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = complex_normal();
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace();
    return MixedState::from_matrix(rho);
  }

  PauliString pauli(unsigned n, bool hermitian = true) {
    PauliString p(n);
    for (unsigned s = 0; s < n; ++s) p.set(s, static_cast<Pauli>(below(4)));
    return p.times_phase(hermitian ? 2 * below(2) : below(4));
  }

  /// Pauli string on k distinct random sites out of n, no identity letters.
  PauliString pauli_on(unsigned n, unsigned k) {
    std::vector<unsigned> sites(n);
    for (unsigned i = 0; i < n; ++i) sites[i] = i;
    std::shuffle(sites.begin(), sites.end(), rng_);
    PauliString p(n);
    for (unsigned j = 0; j < k; ++j) p.set(sites[j], static_cast<Pauli>(1 + below(3)));
    return p.times_phase(2 * below(2));
  }

  Gate gate(unsigned n) {
    const unsigned pick = below(n >= 2 ? 10 : 7);
    const Qubit a = below(n);
    Qubit b = below(n);
    while (n >= 2 && b == a) b = below(n);
    switch (pick) {
      case 0: return Gate::h(a);
      case 1: return Gate::x(a);
      case 2: return Gate::y(a);
      case 3: return Gate::z(a);
      case 4: return Gate::s(a);
      case 5: return Gate::sdg(a);
      case 6: return Gate::pauli_exp(pauli_on(n, 1 + below(std::min(n, 3u))), uniform(-3.2, 3.2));
      case 7: return Gate::cz(a, b);
      case 8: return Gate::cnot(a, b);
      default: return Gate::ch(a, b);
    }
  }

  /// Random Clifford gates plus Pauli exponentials.
  Circuit circuit(unsigned n, unsigned depth) {
    Circuit c(n);
    for (unsigned i = 0; i < depth; ++i) c.add(gate(n));
    return c;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sptprobe::testing
