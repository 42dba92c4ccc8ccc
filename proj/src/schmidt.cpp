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

#include "locc/schmidt.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "locc/errors.hpp"

namespace locc {

CoefficientMatrix::CoefficientMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient matrix must be square");
  }
  if (entries_.rows() < 2) {
    throw Error(ErrorCode::kDimensionTooSmall, "dimension must be at least 2");
  }
}

SchmidtSpectrum schmidt_spectrum(const CoefficientMatrix& matrix, const Tolerances& tol) {
  tol.validate();
  const double norm = matrix.frobenius_norm();
  if (!std::isfinite(norm) || std::fabs(norm - 1.0) > tol.norm) {
    throw Error(ErrorCode::kNotNormalized, "Frobenius norm " + std::to_string(norm));
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix.entries());
  const Eigen::VectorXd& sigma = svd.singularValues();
  std::vector<double> values(static_cast<std::size_t>(sigma.size()));
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    values[static_cast<std::size_t>(i)] = sigma[i] * sigma[i];
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  const long double total = std::accumulate(values.begin(), values.end(), 0.0L);
  for (double& v : values) v = static_cast<double>(v / total);
  return SchmidtSpectrum::from_sorted(std::move(values));
}

}  // namespace locc
