// Copyright 2026 The locc Authors
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

#include <Eigen/Core>

#include "locc/spectrum.hpp"
#include "locc/tolerances.hpp"

namespace locc {

/// Amplitudes psi_ij of a pure state sum_ij psi_ij |i>|j> on two subsystems
/// of equal dimension n >= 2, in a fixed product basis.
class CoefficientMatrix {
 public:
  // Throws kDimensionTooSmall for n < 2 and kInvalidArgument when not square.
  explicit CoefficientMatrix(Eigen::MatrixXcd entries);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  Eigen::Index dimension() const { return entries_.rows(); }
  double frobenius_norm() const { return entries_.norm(); }

 private:
  Eigen::MatrixXcd entries_;
};

// Eigenvalues of the reduced density operator, obtained as the squared
// singular values of the coefficient matrix and rescaled to sum to one.
// Throws kNotNormalized when the Frobenius norm is off by more than tau_norm.
SchmidtSpectrum schmidt_spectrum(const CoefficientMatrix& matrix, const Tolerances& tol = {});

}  // namespace locc
