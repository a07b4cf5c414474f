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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sptprobe/core/types.hpp"
#include "sptprobe/kernels/kernels.hpp"

namespace sptprobe {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/// Signed tensor product of single-qubit Paulis over up to 64 sites:
///   phase * sigma_0 (x) sigma_1 (x) ... , phase in {+1, +i, -1, -i}.
/// Products track the phase exactly.
class PauliString {
 public:
  static constexpr unsigned kMaxSites = 64;

  PauliString() = default;
  /// Identity on n sites.
  explicit PauliString(unsigned n_sites);

  /// Parses an optional phase prefix ("+", "-", "i", "+i", "-i") followed by
  /// one letter per site, site 0 first: "-iXIZ".
  static PauliString parse(std::string_view text);
  static PauliString single(unsigned n_sites, unsigned site, Pauli p);
  static PauliString from_sites(unsigned n_sites,
                                std::initializer_list<std::pair<unsigned, Pauli>> factors);

  unsigned n_sites() const { return n_; }
  Pauli at(unsigned site) const;
  void set(unsigned site, Pauli p);

  /// Phase is i^phase_exponent().
  unsigned phase_exponent() const { return k_; }
  Complex phase() const;
  bool is_hermitian() const { return (k_ & 1u) == 0; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::vector<unsigned> support() const;
  unsigned weight() const;

  PauliString operator*(const PauliString& rhs) const;
  PauliString& operator*=(const PauliString& rhs);
  PauliString operator-() const;
  PauliString times_phase(unsigned exponent) const;

  bool commutes_with(const PauliString& other) const;

  /// Same factors placed at sites [offset, offset + n) of a larger register.
  PauliString embedded(unsigned n_total, unsigned offset) const;
  /// Factors on `sites` only, renumbered 0..sites.size()-1; phase kept.
  PauliString restricted(const std::vector<unsigned>& sites) const;
  /// Complex conjugate (Y -> -Y, i -> -i).
  PauliString conjugate() const;

  /// Basis-state action used by the kernels.
  kernels::PauliMask mask() const;

  /// "+XYZI" style text; parse(str()) == *this.
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  void check_site(unsigned site) const;

  unsigned n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  unsigned k_ = 0;  // phase i^k applied to the product of letters
};

}  // namespace sptprobe
