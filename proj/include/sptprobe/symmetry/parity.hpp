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

#include <vector>

#include "sptprobe/core/types.hpp"
#include "sptprobe/qsim/pauli_string.hpp"

namespace sptprobe {

/// Stabilizers h_i = Z_{i-1} X_i Z_{i+1} of the cluster chain, site order.
/// Open chains drop the missing Z at the two ends; periodic chains need L >= 3.
std::vector<PauliString> cluster_stabilizers(unsigned L, Boundary boundary);

enum class ParityKind { odd, even, total, subsystem };

/// Symmetry operators of the L-site cluster chain.
///   odd / even : product of the stabilizers on odd (even) sites, site 1 odd.
///                Periodic chains give prod X over the sublattice; open
///                chains carry Z tails at the far end (L=4: X1 X3 Z4, Z1 X2 X4).
///   total      : product of all stabilizers (open L=4: Y1 X2 X3 Y4).
///   subsystem  : parity of the prefix A = sites 1..l_a. Open chains give
///                Y1 X2 ... X_{l_a} for l_a < L and the total parity at l_a = L;
///                periodic chains give prod X over A.
/// Throws std::invalid_argument for L < 2, periodic odd L, or l_a outside 1..L.
PauliString sublattice_parity(unsigned L, Boundary boundary, ParityKind which, unsigned l_a = 0);

/// prod X over the odd (odd_sites = true) or even sites inside the prefix of
/// length l_a, as an L-site string. These generate the Z2 x Z2 action on a
/// periodic subsystem.
PauliString restricted_parity(unsigned L, unsigned l_a, bool odd_sites);

/// Operators that map one symmetry sector of rho_A onto another (the edge
/// spin flips), as l_a-site strings. Open chains have a single entanglement
/// cut, flipped by Z at the last site of A; periodic chains have two cuts and
/// return Z at both ends of A.
std::vector<PauliString> edge_flip_operators(unsigned L, Boundary boundary, unsigned l_a);

}  // namespace sptprobe
