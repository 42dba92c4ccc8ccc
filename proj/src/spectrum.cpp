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

#include "locc/spectrum.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <numeric>

#include "locc/errors.hpp"

namespace locc {

double GeometricTail::entry(std::size_t i) const {
  return first * std::pow(ratio, static_cast<double>(i));
}

double GeometricTail::partial_mass(std::size_t t) const {
  return first * -std::expm1(static_cast<double>(t) * std::log(ratio)) / (1.0 - ratio);
}

std::size_t SchmidtNumber::value() const {
  if (infinite_) {
    throw Error(ErrorCode::kInfiniteSchmidtNumber, "spectrum has a tail");
  }
  return count_;
}

std::strong_ordering operator<=>(const SchmidtNumber& lhs, const SchmidtNumber& rhs) {
  if (lhs.infinite_ != rhs.infinite_) {
    return lhs.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (lhs.infinite_) return std::strong_ordering::equal;
  return lhs.count_ <=> rhs.count_;
}

SchmidtSpectrum SchmidtSpectrum::from_values(std::vector<double> values, const Tolerances& tol) {
  return canonicalize(std::move(values), std::nullopt, tol);
}

SchmidtSpectrum SchmidtSpectrum::with_tail(std::vector<double> head, GeometricTail tail,
                                           const Tolerances& tol) {
  return canonicalize(std::move(head), tail, tol);
}

SchmidtSpectrum SchmidtSpectrum::from_sorted(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidSpectrum, "empty spectrum");
  }
  SchmidtSpectrum out;
  out.head_ = std::move(values);
  return out;
}

SchmidtSpectrum SchmidtSpectrum::canonicalize(std::vector<double> head,
                                              std::optional<GeometricTail> tail,
                                              const Tolerances& tol) {
  tol.validate();
  SchmidtSpectrum out;
  if (head.empty() && !tail) {
    throw Error(ErrorCode::kInvalidSpectrum, "empty spectrum");
  }
  for (double& v : head) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidSpectrum, "non-finite entry");
    }
    if (v < 0.0) {
      if (v < -tol.zero) {
        throw Error(ErrorCode::kInvalidSpectrum, "negative entry " + std::to_string(v));
      }
      v = 0.0;
      out.adjusted_ = true;
    }
  }
  if (tail) {
    if (!std::isfinite(tail->first) || tail->first <= 0.0 || !std::isfinite(tail->ratio) ||
        tail->ratio <= 0.0 || tail->ratio >= 1.0) {
      throw Error(ErrorCode::kInvalidSpectrum, "tail needs first > 0 and ratio in (0,1)");
    }
  }
  if (!std::is_sorted(head.begin(), head.end(), std::greater<>())) {
    std::sort(head.begin(), head.end(), std::greater<>());
    out.adjusted_ = true;
  }

  if (tail) {
    while (!head.empty() && head.back() == 0.0) head.pop_back();
  }
  // Tail entries larger than the smallest head entry belong in the head.
  if (tail && !head.empty() && tail->first > head.back()) {
    std::size_t moved = 0;
    std::vector<double> pulled;
    while (tail->entry(moved) > head.back()) {
      pulled.push_back(tail->entry(moved));
      ++moved;
    }
    tail->first = tail->entry(moved);
    std::vector<double> merged(head.size() + pulled.size());
    std::merge(head.begin(), head.end(), pulled.begin(), pulled.end(), merged.begin(),
               std::greater<>());
    head = std::move(merged);
  }

  long double total = std::accumulate(head.begin(), head.end(), 0.0L);
  if (tail) total += tail->mass();
  const double mass = static_cast<double>(total);
  if (std::fabs(mass - 1.0) > tol.norm) {
    throw Error(ErrorCode::kNotNormalized, "total mass " + std::to_string(mass));
  }
  // Totals within rounding of 1 are left alone so that re-ingesting a
  // canonical spectrum reproduces it bit for bit.
  if (std::fabs(total - 1.0L) > 4 * DBL_EPSILON) {
    for (double& v : head) v = static_cast<double>(v / total);
    if (tail) tail->first = static_cast<double>(tail->first / total);
    out.adjusted_ = true;
  }
  out.head_ = std::move(head);
  out.tail_ = tail;
  return out;
}

double SchmidtSpectrum::entry(std::size_t j) const {
  if (j < head_.size()) return head_[j];
  if (tail_) return tail_->entry(j - head_.size());
  return 0.0;
}

double SchmidtSpectrum::residual_mass(std::size_t k) const {
  if (k >= head_.size()) {
    return tail_ ? tail_->mass_from(k - head_.size()) : 0.0;
  }
  long double sum = std::accumulate(head_.begin() + static_cast<std::ptrdiff_t>(k),
                                    head_.end(), 0.0L);
  if (tail_) sum += tail_->mass();
  return static_cast<double>(sum);
}

double SchmidtSpectrum::total_mass() const { return residual_mass(0); }

std::vector<double> SchmidtSpectrum::materialize(std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = entry(j);
  return out;
}

SchmidtNumber schmidt_number(const SchmidtSpectrum& spectrum, const Tolerances& tol) {
  if (spectrum.has_tail()) return SchmidtNumber::infinite();
  auto head = spectrum.head();
  return SchmidtNumber::finite(static_cast<std::size_t>(
      std::count_if(head.begin(), head.end(), [&](double v) { return v > tol.zero; })));
}

std::vector<double> prefix_sums(const SchmidtSpectrum& spectrum, std::size_t k_max) {
  std::vector<double> out;
  out.reserve(k_max);
  const auto head = spectrum.head();
  double running = 0.0;
  for (std::size_t k = 0; k < k_max; ++k) {
    if (k < head.size()) {
      running += head[k];
      out.push_back(running);
    } else if (spectrum.has_tail()) {
      out.push_back(running + spectrum.tail()->partial_mass(k + 1 - head.size()));
    } else {
      out.push_back(running);
    }
  }
  return out;
}

double spectrum_distance(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  // 2 - 2 sum sqrt(a_j b_j) equals sum (sqrt(a_j) - sqrt(b_j))^2 for unit
  // mass, and the latter is exactly zero for identical inputs.
  const std::size_t aligned = std::max(a.head_size(), b.head_size());
  long double squared = 0.0L;
  for (std::size_t j = 0; j < aligned; ++j) {
    const long double d = std::sqrt(static_cast<long double>(a.entry(j))) -
                          std::sqrt(static_cast<long double>(b.entry(j)));
    squared += d * d;
  }
  if (a.has_tail() && b.has_tail()) {
    const double fa = a.entry(aligned);
    const double fb = b.entry(aligned);
    const double ra = a.tail()->ratio;
    const double rb = b.tail()->ratio;
    long double rest = 0.0L;
    if (ra == rb) {
      const long double d = std::sqrt(static_cast<long double>(fa)) -
                            std::sqrt(static_cast<long double>(fb));
      rest = d * d / (1.0L - ra);
    } else {
      rest = fa / (1.0L - ra) + fb / (1.0L - rb) -
             2.0L * std::sqrt(static_cast<long double>(fa) * fb) /
                 (1.0L - std::sqrt(static_cast<long double>(ra) * rb));
    }
    squared += std::max(rest, 0.0L);
  } else if (a.has_tail()) {
    squared += a.residual_mass(aligned);
  } else if (b.has_tail()) {
    squared += b.residual_mass(aligned);
  }
  return static_cast<double>(std::sqrt(squared));
}

}  // namespace locc
