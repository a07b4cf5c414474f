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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sptprobe/qsim/pauli_string.hpp"
#include "sptprobe/qsim/states.hpp"
#include "sptprobe/symmetry/abelian_group.hpp"

namespace sptprobe {

/// Representation of an Abelian group by Pauli strings: element g acts as
/// operators()[g]. Phases are kept, so Z4 can be represented by i*P.
class SymmetryAction {
 public:
  /// Throws std::invalid_argument when the count differs from |G|, the site
  /// counts disagree, the operators do not mutually commute, or
  /// U(g) U(h) != U(gh) (letters and phase compared exactly).
  SymmetryAction(const AbelianGroup& group, std::vector<PauliString> operators);

  /// Z2 = {e, p}.
  static SymmetryAction z2(const PauliString& p);
  /// Z2 x Z2 generated by a (first factor) and b (second factor); element
  /// index a_power + 2 * b_power, matching AbelianGroup::product.
  static SymmetryAction z2xz2(const PauliString& a, const PauliString& b);

  const AbelianGroup& group() const { return group_; }
  const PauliString& operator()(unsigned g) const { return ops_.at(g); }
  const std::vector<PauliString>& operators() const { return ops_; }
  unsigned n_sites() const { return ops_.front().n_sites(); }

 private:
  AbelianGroup group_;
  std::vector<PauliString> ops_;
};

/// Pi_k = (1/|G|) sum_g chi_k(g) U(g), kept as a sum of Pauli strings with
/// unit phase; dense form only for small supports.
class SectorProjector {
 public:
  static constexpr unsigned kMaxDenseSites = 8;

  /// Throws std::out_of_range for k >= |G|.
  SectorProjector(const SymmetryAction& action, unsigned k);

  unsigned sector() const { return k_; }
  unsigned n_sites() const { return n_; }
  /// (coefficient, string) pairs; strings have phase +1 and are distinct.
  const std::vector<std::pair<Complex, PauliString>>& terms() const { return terms_; }

  /// Throws std::length_error above kMaxDenseSites.
  Eigen::MatrixXcd dense() const;

  /// Tr[rho Pi] (or <psi|Pi|psi>) from the Pauli expansion.
  Complex expectation(const MixedState& rho) const;
  Complex expectation(const PureState& psi) const;

 private:
  unsigned k_ = 0;
  unsigned n_ = 0;
  std::vector<std::pair<Complex, PauliString>> terms_;
};

/// Dense matrix of a Pauli string (including its phase).
Eigen::MatrixXcd pauli_dense(const PauliString& p);

}  // namespace sptprobe
