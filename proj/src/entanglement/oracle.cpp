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

#include "sptprobe/entanglement/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "sptprobe/qsim/ops.hpp"
#include "sptprobe/symmetry/classify.hpp"

namespace sptprobe {
namespace {

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, unsigned n) {
  Eigen::MatrixXcd out = m;
  for (unsigned k = 1; k < n; ++k) out = out * m;
  return out;
}

}  // namespace

std::vector<double> entanglement_spectrum(const MixedState& rho_a) {
  if (rho_a.hermiticity_error() > kStateTolerance) {
    throw std::domain_error("entanglement_spectrum: matrix is not Hermitian");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_a.matrix(),
                                                               Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  for (double& v : out) {
    if (v < 0.0 && v >= -kStateTolerance) v = 0.0;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double moment(const MixedState& rho, unsigned n) {
  if (n == 0) throw std::invalid_argument("moment: n must be >= 1");
  if (n == 1) return rho.trace().real();
  if (n == 2) return rho.purity();
  return matrix_power(rho.matrix(), n).trace().real();
}

double von_neumann_entropy(const MixedState& rho_a) {
  double s = 0.0;
  for (double v : entanglement_spectrum(rho_a)) {
    if (v > 1e-15) s -= v * std::log(v);
  }
  return s;
}

double renyi_entropy(const MixedState& rho_a, unsigned n) {
  if (n == 0) throw std::invalid_argument("renyi_entropy: n must be >= 1");
  if (n == 1) return von_neumann_entropy(rho_a);
  return -std::log(moment(rho_a, n));
}

ResolvedMoment symmetry_resolved_moment(const MixedState& rho_a, const SectorProjector& pi,
                                        unsigned n, double tol) {
  if (n == 0) throw std::invalid_argument("symmetry_resolved_moment: n must be >= 1");
  if (pi.n_sites() != rho_a.n_qubits()) {
    throw std::invalid_argument("symmetry_resolved_moment: projector and state sizes differ");
  }
  const Eigen::MatrixXcd rn = matrix_power(rho_a.matrix(), n);
  ResolvedMoment out;
  Complex value{};
  if (pi.n_sites() <= SectorProjector::kMaxDenseSites) {
    const Eigen::MatrixXcd p = pi.dense();
    value = (rn * p).trace();
    out.commutes = (p * rho_a.matrix() - rho_a.matrix() * p).cwiseAbs().maxCoeff() <= tol;
  } else {
    const MixedState powered = MixedState::adopt(rn);
    value = pi.expectation(powered);
    // Sufficient test on large supports: every Pauli term commutes with rho.
    out.commutes = std::all_of(pi.terms().begin(), pi.terms().end(), [&](const auto& t) {
      return symmetry_commutator_norm(rho_a, t.second) <= tol;
    });
  }
  out.value = value.real();
  out.imag = value.imag();
  return out;
}

EntanglementReport entanglement_report(const MixedState& rho_a, unsigned l_a,
                                       const SymmetryAction& action, unsigned max_moment,
                                       double tol) {
  EntanglementReport rep;
  rep.l_a = l_a;
  rep.spectrum = entanglement_spectrum(rho_a);
  for (unsigned n = 1; n <= max_moment; ++n) rep.renyi[n] = renyi_entropy(rho_a, n);
  const AbelianGroup& g = action.group();
  for (unsigned k = 0; k < g.order(); ++k) {
    rep.sector_labels.push_back("k" + std::to_string(k));
    const SectorProjector pi(action, k);
    for (unsigned n = 1; n <= max_moment; ++n) {
      rep.resolved[{k, n}] = symmetry_resolved_moment(rho_a, pi, n, tol).value;
    }
  }
  const DegeneracyResult d = degeneracy_check(rep, tol);
  rep.degenerate = d.degenerate;
  rep.gap = d.gap;
  return rep;
}

DegeneracyResult degeneracy_check(const EntanglementReport& report, double tol) {
  DegeneracyResult out;
  const auto sectors = static_cast<unsigned>(report.sector_labels.size());
  for (const auto& [key, value] : report.resolved) {
    const auto [k, n] = key;
    for (unsigned l = k + 1; l < sectors; ++l) {
      const auto it = report.resolved.find({l, n});
      if (it == report.resolved.end()) continue;
      const double diff = std::abs(value - it->second);
      if (diff > out.gap) {
        out.gap = diff;
        out.worst_moment = n;
      }
    }
  }
  out.degenerate = out.gap <= tol;
  return out;
}

}  // namespace sptprobe
