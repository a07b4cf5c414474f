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

#include "sptprobe/symmetry/parity.hpp"

#include <stdexcept>

namespace sptprobe {
namespace {

void check_chain(unsigned L, Boundary boundary) {
  if (L < 2) throw std::invalid_argument("cluster chain needs L >= 2");
  if (boundary == Boundary::periodic && L % 2 != 0) {
    throw std::invalid_argument("periodic cluster chain needs even L");
  }
}

}  // namespace

std::vector<PauliString> cluster_stabilizers(unsigned L, Boundary boundary) {
  if (L < 2) throw std::invalid_argument("cluster chain needs L >= 2");
  if (boundary == Boundary::periodic && L < 3) {
    throw std::invalid_argument("periodic cluster chain needs L >= 3");
  }
  std::vector<PauliString> out;
  out.reserve(L);
  for (unsigned i = 0; i < L; ++i) {
    PauliString h = PauliString::single(L, i, Pauli::X);
    if (i > 0) h.set(i - 1, Pauli::Z);
    if (i + 1 < L) h.set(i + 1, Pauli::Z);
    if (boundary == Boundary::periodic) {
      if (i == 0) h.set(L - 1, Pauli::Z);
      if (i + 1 == L) h.set(0, Pauli::Z);
    }
    out.push_back(h);
  }
  return out;
}

PauliString sublattice_parity(unsigned L, Boundary boundary, ParityKind which, unsigned l_a) {
  check_chain(L, boundary);
  if (which == ParityKind::subsystem) {
    if (l_a < 1 || l_a > L) throw std::invalid_argument("subsystem size must be in 1..L");
    if (boundary == Boundary::periodic) {
      PauliString p(L);
      for (unsigned i = 0; i < l_a; ++i) p.set(i, Pauli::X);
      return p;
    }
    if (l_a == L) return sublattice_parity(L, boundary, ParityKind::total);
    PauliString p = PauliString::single(L, 0, Pauli::Y);
    for (unsigned i = 1; i < l_a; ++i) p.set(i, Pauli::X);
    return p;
  }
  const auto h = cluster_stabilizers(L, boundary);
  PauliString p(L);
  for (unsigned i = 0; i < L; ++i) {
    // Index i is site i + 1 in 1-based numbering, so even indices are the odd sublattice.
    const bool odd_site = i % 2 == 0;
    if (which == ParityKind::total || (which == ParityKind::odd) == odd_site) p *= h[i];
  }
  return p;
}

PauliString restricted_parity(unsigned L, unsigned l_a, bool odd_sites) {
  if (l_a < 1 || l_a > L) throw std::invalid_argument("subsystem size must be in 1..L");
  PauliString p(L);
  for (unsigned i = odd_sites ? 0 : 1; i < l_a; i += 2) p.set(i, Pauli::X);
  return p;
}

std::vector<PauliString> edge_flip_operators(unsigned L, Boundary boundary, unsigned l_a) {
  check_chain(L, boundary);
  if (l_a < 1 || l_a >= L) throw std::invalid_argument("edge flips need 1 <= l_a < L");
  if (boundary == Boundary::open) return {PauliString::single(l_a, l_a - 1, Pauli::Z)};
  if (l_a == 1) return {PauliString::single(1, 0, Pauli::Z)};
  return {PauliString::single(l_a, 0, Pauli::Z), PauliString::single(l_a, l_a - 1, Pauli::Z)};
}

}  // namespace sptprobe
