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

#include "sptprobe/symmetry/abelian_group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sptprobe {

AbelianGroup::AbelianGroup(std::vector<std::string> labels,
                           std::vector<std::vector<unsigned>> multiplication,
                           std::vector<std::vector<Complex>> characters)
    : labels_(std::move(labels)), mult_(std::move(multiplication)), chars_(std::move(characters)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("AbelianGroup: no elements");
  if (mult_.size() != n || chars_.size() != n) {
    throw std::invalid_argument("AbelianGroup: table sizes differ from element count");
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (mult_[g].size() != n || chars_[g].size() != n) {
      throw std::invalid_argument("AbelianGroup: tables must be square");
    }
  }
  for (unsigned g = 0; g < n; ++g) {
    std::vector<bool> seen(n, false);
    if (mult_[0][g] != g) throw std::invalid_argument("AbelianGroup: element 0 is not the identity");
    for (unsigned h = 0; h < n; ++h) {
      const unsigned gh = mult_[g][h];
      if (gh >= n) throw std::invalid_argument("AbelianGroup: product out of range");
      if (gh != mult_[h][g]) throw std::invalid_argument("AbelianGroup: table is not commutative");
      if (seen[gh]) throw std::invalid_argument("AbelianGroup: table row is not a permutation");
      seen[gh] = true;
    }
  }
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      for (unsigned c = 0; c < n; ++c) {
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) {
          throw std::invalid_argument("AbelianGroup: table is not associative");
        }
      }
    }
  }
  for (unsigned k = 0; k < n; ++k) {
    if (std::abs(chars_[k][0] - 1.0) > kTableTolerance) {
      throw std::invalid_argument("AbelianGroup: character of the identity must be 1");
    }
    for (unsigned g = 0; g < n; ++g) {
      for (unsigned h = 0; h < n; ++h) {
        if (std::abs(chars_[k][mult_[g][h]] - chars_[k][g] * chars_[k][h]) > kTableTolerance) {
          throw std::invalid_argument("AbelianGroup: character row is not a homomorphism");
        }
      }
    }
  }
  if (orthogonality_error() > kTableTolerance) {
    throw std::invalid_argument("AbelianGroup: character rows are not orthogonal");
  }
}

AbelianGroup AbelianGroup::cyclic(unsigned n) {
  if (n == 0) throw std::invalid_argument("AbelianGroup::cyclic: order must be >= 1");
  std::vector<std::string> labels(n);
  std::vector<std::vector<unsigned>> mult(n, std::vector<unsigned>(n));
  std::vector<std::vector<Complex>> chars(n, std::vector<Complex>(n));
  for (unsigned m = 0; m < n; ++m) {
    labels[m] = m == 0 ? "e" : (m == 1 ? "g" : "g^" + std::to_string(m));
    for (unsigned l = 0; l < n; ++l) mult[m][l] = (m + l) % n;
  }
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned m = 0; m < n; ++m) {
      const unsigned r = (k * m) % n;
      // Exact values at quarter turns keep Z2 and Z4 tables free of rounding.
      if (4 * r % n == 0) {
        static constexpr Complex kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        chars[k][m] = kQuarter[4 * r / n];
      } else {
        chars[k][m] = std::polar(1.0, 2.0 * std::numbers::pi * r / n);
      }
    }
  }
  return AbelianGroup(std::move(labels), std::move(mult), std::move(chars));
}

AbelianGroup AbelianGroup::product(const AbelianGroup& a, const AbelianGroup& b) {
  const unsigned na = a.order();
  const unsigned nb = b.order();
  const unsigned n = na * nb;
  std::vector<std::string> labels(n);
  std::vector<std::vector<unsigned>> mult(n, std::vector<unsigned>(n));
  std::vector<std::vector<Complex>> chars(n, std::vector<Complex>(n));
  for (unsigned g = 0; g < n; ++g) {
    labels[g] = "(" + a.labels()[g % na] + "," + b.labels()[g / na] + ")";
    for (unsigned h = 0; h < n; ++h) {
      mult[g][h] = a.multiply(g % na, h % na) + na * b.multiply(g / na, h / na);
    }
  }
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned g = 0; g < n; ++g) {
      chars[k][g] = a.character(k % na, g % na) * b.character(k / na, g / na);
    }
  }
  return AbelianGroup(std::move(labels), std::move(mult), std::move(chars));
}

double AbelianGroup::orthogonality_error() const {
  const std::size_t n = labels_.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      Complex acc{};
      for (std::size_t g = 0; g < n; ++g) acc += chars_[k][g] * std::conj(chars_[l][g]);
      const double expect = k == l ? static_cast<double>(n) : 0.0;
      worst = std::max(worst, std::abs(acc - expect));
    }
  }
  return worst;
}

}  // namespace sptprobe
