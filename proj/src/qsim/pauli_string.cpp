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

#include "sptprobe/qsim/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace sptprobe {
namespace {

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(unsigned n_sites) : n_(n_sites) {
  if (n_sites > kMaxSites) throw std::invalid_argument("PauliString: more than 64 sites");
}

PauliString PauliString::parse(std::string_view text) {
  unsigned k = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') k = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    k = (k + 1) % 4;
    text.remove_prefix(1);
  }
  PauliString out(static_cast<unsigned>(text.size()));
  for (unsigned s = 0; s < text.size(); ++s) {
    switch (text[s]) {
      case 'I': case '_': break;
      case 'X': out.set(s, Pauli::X); break;
      case 'Y': out.set(s, Pauli::Y); break;
      case 'Z': out.set(s, Pauli::Z); break;
      default:
        throw std::invalid_argument("PauliString: bad letter '" + std::string(1, text[s]) + "'");
    }
  }
  out.k_ = k;
  return out;
}

PauliString PauliString::single(unsigned n_sites, unsigned site, Pauli p) {
  PauliString out(n_sites);
  out.set(site, p);
  return out;
}

PauliString PauliString::from_sites(unsigned n_sites,
                                    std::initializer_list<std::pair<unsigned, Pauli>> factors) {
  PauliString out(n_sites);
  for (const auto& [site, p] : factors) out.set(site, p);
  return out;
}

void PauliString::check_site(unsigned site) const {
  if (site >= n_) throw std::out_of_range("PauliString: site index out of range");
}

Pauli PauliString::at(unsigned site) const {
  check_site(site);
  const bool x = (x_ >> site) & 1;
  const bool z = (z_ >> site) & 1;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(unsigned site, Pauli p) {
  check_site(site);
  const std::uint64_t bit = std::uint64_t{1} << site;
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

Complex PauliString::phase() const { return kPhases[k_]; }

std::vector<unsigned> PauliString::support() const {
  std::vector<unsigned> sites;
  for (unsigned s = 0; s < n_; ++s) {
    if (((x_ | z_) >> s) & 1) sites.push_back(s);
  }
  return sites;
}

unsigned PauliString::weight() const { return static_cast<unsigned>(std::popcount(x_ | z_)); }

// A letter string with masks (x, z) equals i^{|x&z|} X^x Z^z, so products
// reduce to the symplectic rule X^a Z^b X^c Z^d = (-1)^{|b&c|} X^{a^c} Z^{b^d}.
PauliString PauliString::operator*(const PauliString& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("PauliString: site count mismatch in product");
  PauliString out(n_);
  out.x_ = x_ ^ rhs.x_;
  out.z_ = z_ ^ rhs.z_;
  const unsigned total = k_ + rhs.k_ + std::popcount(x_ & z_) + std::popcount(rhs.x_ & rhs.z_) +
                         2 * std::popcount(z_ & rhs.x_);
  const unsigned y_out = std::popcount(out.x_ & out.z_);
  out.k_ = (total + 4 * 64 - y_out) % 4;
  return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) { return *this = *this * rhs; }

PauliString PauliString::operator-() const { return times_phase(2); }

PauliString PauliString::times_phase(unsigned exponent) const {
  PauliString out = *this;
  out.k_ = (k_ + exponent) % 4;
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("PauliString: site count mismatch");
  return ((std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) & 1) == 0;
}

PauliString PauliString::embedded(unsigned n_total, unsigned offset) const {
  if (offset + n_ > n_total) throw std::out_of_range("PauliString: embedding out of range");
  PauliString out(n_total);
  out.x_ = x_ << offset;
  out.z_ = z_ << offset;
  out.k_ = k_;
  return out;
}

PauliString PauliString::restricted(const std::vector<unsigned>& sites) const {
  PauliString out(static_cast<unsigned>(sites.size()));
  for (unsigned j = 0; j < sites.size(); ++j) out.set(j, at(sites[j]));
  out.k_ = k_;
  return out;
}

PauliString PauliString::conjugate() const {
  PauliString out = *this;
  const unsigned n_y = std::popcount(x_ & z_);
  out.k_ = ((4 - k_) % 4 + 2 * n_y) % 4;
  return out;
}

kernels::PauliMask PauliString::mask() const {
  return {x_, z_, kPhases[(k_ + std::popcount(x_ & z_)) % 4]};
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[k_];
  for (unsigned s = 0; s < n_; ++s) out.push_back(to_char(at(s)));
  return out;
}

}  // namespace sptprobe
