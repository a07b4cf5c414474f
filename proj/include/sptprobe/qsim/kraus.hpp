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

#include <Eigen/Dense>

#include "sptprobe/core/types.hpp"

namespace sptprobe {

/// CPTP map rho -> sum_i K_i rho K_i^dagger on k qubits. Operator local index
/// bit j refers to the j-th target passed at application time.
class KrausChannel {
 public:
  static constexpr double kCompletenessTolerance = 1e-10;

  /// Throws std::invalid_argument unless all operators share one 2^k square
  /// shape and sum K^dagger K = I within `tol`.
  explicit KrausChannel(std::vector<Eigen::MatrixXcd> operators, std::string name = "kraus",
                        double tol = kCompletenessTolerance);

  static KrausChannel unitary(const Eigen::MatrixXcd& u, std::string name = "unitary");
  static KrausChannel identity(unsigned arity);

  unsigned arity() const { return arity_; }
  const std::vector<Eigen::MatrixXcd>& operators() const { return ops_; }
  const std::string& name() const { return name_; }

  /// max |sum K^dagger K - I|.
  double completeness_error() const;

 private:
  std::vector<Eigen::MatrixXcd> ops_;
  std::string name_;
  unsigned arity_ = 0;
};

}  // namespace sptprobe
