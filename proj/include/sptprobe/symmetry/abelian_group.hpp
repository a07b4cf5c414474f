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

#include <string>
#include <vector>

#include "sptprobe/core/types.hpp"

namespace sptprobe {

/// Finite Abelian group given by its multiplication table and character
/// table. Element 0 is the identity; character row k is the k-th irrep.
class AbelianGroup {
 public:
  static constexpr double kTableTolerance = 1e-10;

  /// Validates group axioms, commutativity, chi_k(e) = 1, the homomorphism
  /// property and row orthogonality. Throws std::invalid_argument.
  AbelianGroup(std::vector<std::string> labels, std::vector<std::vector<unsigned>> multiplication,
               std::vector<std::vector<Complex>> characters);

  /// Z_n with generator g: element m is g^m, chi_k(g^m) = exp(2 pi i k m / n).
  static AbelianGroup cyclic(unsigned n);
  static AbelianGroup trivial() { return cyclic(1); }
  /// Direct product; element (a, b) has index a + |A| * b, likewise for irreps.
  static AbelianGroup product(const AbelianGroup& a, const AbelianGroup& b);

  unsigned order() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  unsigned multiply(unsigned g, unsigned h) const { return mult_.at(g).at(h); }
  Complex character(unsigned k, unsigned g) const { return chars_.at(k).at(g); }
  const std::vector<std::vector<Complex>>& character_table() const { return chars_; }

  /// max_{k,l} |sum_g chi_k(g) conj(chi_l(g)) - |G| delta_kl|.
  double orthogonality_error() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<unsigned>> mult_;
  std::vector<std::vector<Complex>> chars_;
};

}  // namespace sptprobe
