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

#include "locc/genericity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "locc/catalysis.hpp"
#include "locc/errors.hpp"
#include "locc/majorization.hpp"

namespace locc {

SchmidtSpectrum complete_extension(const SchmidtSpectrum& base, unsigned m,
                                   const Tolerances& tol) {
  if (base.has_tail()) {
    throw Error(ErrorCode::kInvalidArgument, "completion needs a finite base");
  }
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "approximation index must be positive");
  const std::size_t p = schmidt_number(base, tol).value();
  const double scale = static_cast<double>(m) / (static_cast<double>(m) + 1.0);
  std::vector<double> head(p);
  for (std::size_t j = 0; j < p; ++j) head[j] = base.entry(j) * scale;
  const GeometricTail tail{1.0 / (2.0 * (static_cast<double>(m) + 1.0)), 0.5};
  return SchmidtSpectrum::with_tail(std::move(head), tail, tol);
}

std::size_t complete_depth(const SchmidtSpectrum& spectrum, const Tolerances& tol) {
  const auto head = spectrum.head();
  const auto positive =
      static_cast<std::size_t>(std::count_if(head.begin(), head.end(), [&](double v) {
        return v > tol.zero;
      }));
  if (positive < head.size() || !spectrum.has_tail()) return positive;
  const GeometricTail& tail = *spectrum.tail();
  double guess = std::floor(std::log(tol.zero / tail.first) / std::log(tail.ratio));
  std::size_t t = static_cast<std::size_t>(std::max(0.0, guess));
  while (t > 0 && tail.entry(t - 1) <= tol.zero) --t;
  while (tail.entry(t) > tol.zero) ++t;
  return head.size() + t;
}

TruncationPair truncation_pair(const SchmidtSpectrum& a, const SchmidtSpectrum& b, unsigned m,
                               const Tolerances& tol) {
  tol.validate();
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "truncation index must be >= 2");
  if (std::fabs(a.top() - b.top()) <= tol.cmp) {
    throw Error(ErrorCode::kTopEntriesTied, "top entries agree within tau_cmp");
  }
  auto truncate = [&](const SchmidtSpectrum& s, unsigned keep) {
    std::vector<double> kept = s.materialize(keep);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (!(kept[j] > tol.zero)) {
        throw Error(ErrorCode::kNotComplete, "entry " + std::to_string(j + 1) + " is zero");
      }
    }
    const long double total = std::accumulate(kept.begin(), kept.end(), 0.0L);
    for (double& v : kept) v = static_cast<double>(v / total);
    return SchmidtSpectrum::from_sorted(std::move(kept));
  };
  const bool a_is_long = a.top() > b.top();
  TruncationPair out{truncate(a, a_is_long ? m : m - 1), truncate(b, a_is_long ? m - 1 : m), m,
                     a_is_long};
  return out;
}

MinimalCIndex minimal_c_index(const SchmidtSpectrum& a, const SchmidtSpectrum& b, unsigned m_max,
                              const Tolerances& tol) {
  tol.validate();
  if (std::fabs(a.top() - b.top()) <= tol.cmp) {
    throw Error(ErrorCode::kTopEntriesTied, "top entries agree within tau_cmp");
  }
  const bool a_is_long = a.top() > b.top();
  const std::size_t long_depth = complete_depth(a_is_long ? a : b, tol);
  const std::size_t short_depth = complete_depth(a_is_long ? b : a, tol);
  const std::size_t available = std::min(long_depth, short_depth + 1);
  const unsigned limit =
      static_cast<unsigned>(std::min<std::size_t>(m_max, std::max<std::size_t>(available, 1)));

  auto satisfied = [&](unsigned m) {
    const TruncationPair pair = truncation_pair(a, b, m, tol);
    return condition_c(pair.a, pair.b, tol).satisfied;
  };
  for (unsigned m = 2; m <= limit; ++m) {
    if (!satisfied(m)) continue;
    MinimalCIndex out{m, {}};
    for (unsigned later = m + 1; later <= std::min(m + 5, limit); ++later) {
      if (!satisfied(later)) out.permanence_failures.push_back(later);
    }
    return out;
  }
  throw Error(ErrorCode::kNotFoundWithin,
              "no truncation index up to " + std::to_string(limit) + " satisfies (C)");
}

std::vector<ConvergenceRow> convergence_report(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                                               std::span<const unsigned> m_list,
                                               const Tolerances& tol) {
  std::vector<unsigned> ms(m_list.begin(), m_list.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<ConvergenceRow> rows;
  rows.reserve(ms.size());
  for (unsigned m : ms) {
    const TruncationPair pair = truncation_pair(a, b, m, tol);
    ConvergenceRow row;
    row.m = m;
    row.dist_a = spectrum_distance(pair.a, a);
    row.dist_b = spectrum_distance(pair.b, b);
    row.condition_c = condition_c(pair.a, pair.b, tol).satisfied;
    row.incomparable = compare(pair.a, pair.b, tol).relation == Relation::kIncomparable;
    if (row.condition_c && !row.incomparable) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "condition (C) holds at m=" + std::to_string(m) + " but pair is comparable");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace locc
