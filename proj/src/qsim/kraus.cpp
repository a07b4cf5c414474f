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

#include "sptprobe/qsim/kraus.hpp"

#include <bit>
#include <stdexcept>

namespace sptprobe {

KrausChannel::KrausChannel(std::vector<Eigen::MatrixXcd> operators, std::string name, double tol)
    : ops_(std::move(operators)), name_(std::move(name)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
  const Eigen::Index dim = ops_.front().rows();
  if (dim < 2 || !std::has_single_bit(static_cast<std::size_t>(dim))) {
    throw std::invalid_argument("KrausChannel: operator size must be 2^k with k >= 1");
  }
  for (const auto& k : ops_) {
    if (k.rows() != dim || k.cols() != dim) {
      throw std::invalid_argument("KrausChannel: operators differ in shape");
    }
  }
  arity_ = static_cast<unsigned>(std::countr_zero(static_cast<std::size_t>(dim)));
  if (completeness_error() > tol) {
    throw std::invalid_argument("KrausChannel '" + name_ + "': sum K^dagger K != I");
  }
}

KrausChannel KrausChannel::unitary(const Eigen::MatrixXcd& u, std::string name) {
  return KrausChannel({u}, std::move(name));
}

KrausChannel KrausChannel::identity(unsigned arity) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity);
  return KrausChannel({Eigen::MatrixXcd::Identity(dim, dim)}, "identity");
}

double KrausChannel::completeness_error() const {
  const Eigen::Index dim = ops_.front().rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

}  // namespace sptprobe
