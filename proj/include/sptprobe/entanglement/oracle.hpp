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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sptprobe/qsim/states.hpp"
#include "sptprobe/symmetry/projector.hpp"

namespace sptprobe {

/// Eigenvalues of rho_A, descending. Values in [-1e-10, 0) become 0.
/// Throws std::domain_error if rho_A is not Hermitian within 1e-10.
std::vector<double> entanglement_spectrum(const MixedState& rho_a);

/// Tr[rho^n] for n >= 1.
double moment(const MixedState& rho, unsigned n);

/// -ln Tr[rho^n] for n >= 2; n = 1 returns the von Neumann entropy.
/// Throws std::invalid_argument for n = 0.
double renyi_entropy(const MixedState& rho_a, unsigned n);
double von_neumann_entropy(const MixedState& rho_a);

struct ResolvedMoment {
  /// Re Tr[rho^n Pi].
  double value = 0.0;
  /// Im Tr[rho^n Pi], nonzero only when rho and Pi fail to commute.
  double imag = 0.0;
  /// [Pi, rho] = 0 within the tolerance.
  bool commutes = true;
};

/// Tr[rho_A^n Pi]; n = 1 is the sector probability. The value is returned
/// even when the commutation check fails. Throws std::invalid_argument when
/// Pi and rho_A act on different site counts.
ResolvedMoment symmetry_resolved_moment(const MixedState& rho_a, const SectorProjector& pi,
                                        unsigned n, double tol = 1e-8);

struct EntanglementReport {
  unsigned l_a = 0;
  std::vector<double> spectrum;
  /// n -> S_n (-ln Tr rho^n; n = 1 is von Neumann).
  std::map<unsigned, double> renyi;
  std::vector<std::string> sector_labels;
  /// (sector, n) -> Tr[rho^n Pi_sector].
  std::map<std::pair<unsigned, unsigned>, double> resolved;
  bool degenerate = false;
  double gap = 0.0;
};

/// Full oracle summary with moments n = 1..max_moment for every sector of
/// `action`, and the degeneracy check at `tol`.
EntanglementReport entanglement_report(const MixedState& rho_a, unsigned l_a,
                                       const SymmetryAction& action, unsigned max_moment = 4,
                                       double tol = 1e-8);

struct DegeneracyResult {
  bool degenerate = false;
  /// Largest |S~_n(k) - S~_n(l)| over n and sector pairs.
  double gap = 0.0;
  unsigned worst_moment = 0;
};

DegeneracyResult degeneracy_check(const EntanglementReport& report, double tol = 1e-8);

}  // namespace sptprobe
