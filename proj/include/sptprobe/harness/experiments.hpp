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

#include <cstddef>
#include <functional>

#include "sptprobe/harness/config.hpp"
#include "sptprobe/harness/report.hpp"

namespace sptprobe::harness {

/// Calls fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
/// concurrency). The first exception thrown is rethrown after all workers
/// stop. Callers write results into per-index slots, so the outcome does not
/// depend on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Swap-test purity per L_A. Columns: L_A, quantity (S2 | neg_log_S2),
/// estimate, stderr, oracle. The oracle is the exact expectation of the
/// estimator under the configured noise, readout bias included.
Report run_entropy(const ExperimentConfig& cfg, unsigned threads = 0);

/// Symmetry-resolved moments on the open chain. Columns: L_A, sector (+|-),
/// moment (1|2), estimate, stderr, oracle. Diagnostics carry the sector gaps,
/// the imaginary part of Tr[rho^2 P] and the degeneracy verdict.
Report run_resolved(const ExperimentConfig& cfg, unsigned threads = 0);

/// Wire teleportation sweep. Columns: alpha, beta, state, estimate, stderr,
/// oracle; state "min" is f_min with the standard error of the minimizing
/// input.
Report run_teleport(const ExperimentConfig& cfg, unsigned threads = 0);

/// Exact symmetry classification of each configured channel on the
/// resource state. Columns: channel, parameter, L_A, verdict, witness,
/// sector_gap.
Report run_classify(const ExperimentConfig& cfg, unsigned threads = 0);

/// Exact entanglement data of the resource state. Columns: L_A, quantity
/// (eigenvalue | renyi | resolved | degeneracy_gap), index, sector, value.
Report run_oracle(const ExperimentConfig& cfg, unsigned threads = 0);

Report run_experiment(const ExperimentConfig& cfg, unsigned threads = 0);

}  // namespace sptprobe::harness
