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

#include "locc/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "locc/errors.hpp"

namespace locc {

namespace {

// Smallest k >= start with tail residual below tau.
std::size_t settle_index(const SchmidtSpectrum& s, std::size_t start, double tau) {
  if (!s.has_tail()) return start;
  const GeometricTail& tail = *s.tail();
  const std::size_t head = s.head_size();
  const double bound = std::log(tau * (1.0 - tail.ratio) / tail.first) / std::log(tail.ratio);
  double guess = std::max(0.0, std::floor(bound));
  if (guess > static_cast<double>(kMaxHorizon)) {
    throw Error(ErrorCode::kHorizonExceeded, "tail residual needs more than 1e6 terms");
  }
  std::size_t t = static_cast<std::size_t>(guess);
  while (t > 0 && tail.mass_from(t - 1) < tau) --t;
  while (tail.mass_from(t) >= tau) ++t;
  return std::max(start, head + t);
}

struct Horizon {
  std::size_t length;
  double slack;
};

Horizon horizon_of(const SchmidtSpectrum& a, const SchmidtSpectrum& b, const Tolerances& tol) {
  tol.validate();
  std::size_t k = std::max<std::size_t>({a.head_size(), b.head_size(), 1});
  k = settle_index(a, k, tol.cmp);
  k = settle_index(b, k, tol.cmp);
  if (k > kMaxHorizon) {
    throw Error(ErrorCode::kHorizonExceeded, "comparison horizon " + std::to_string(k));
  }
  return {k, tol.cmp + std::max(a.residual_mass(k), b.residual_mass(k))};
}

// Calls visit(k, prefix_a, prefix_b) for k = 1..length until it returns false.
template <typename Visit>
void scan_prefixes(const SchmidtSpectrum& a, const SchmidtSpectrum& b, std::size_t length,
                   Visit&& visit) {
  if (!a.has_tail() && !b.has_tail()) {
    const auto ha = a.head();
    const auto hb = b.head();
    double pa = 0.0;
    double pb = 0.0;
    for (std::size_t j = 0; j < length; ++j) {
      if (j < ha.size()) pa += ha[j];
      if (j < hb.size()) pb += hb[j];
      if (!visit(j + 1, pa, pb)) return;
    }
    return;
  }
  const auto pa = prefix_sums(a, length);
  const auto pb = prefix_sums(b, length);
  for (std::size_t j = 0; j < length; ++j) {
    if (!visit(j + 1, pa[j], pb[j])) return;
  }
}

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::kForwardConvertible:
      return "forward_convertible";
    case Relation::kBackwardConvertible:
      return "backward_convertible";
    case Relation::kEquivalent:
      return "equivalent";
    case Relation::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

std::size_t comparison_horizon(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                               const Tolerances& tol) {
  return horizon_of(a, b, tol).length;
}

bool majorized_by(const SchmidtSpectrum& a, const SchmidtSpectrum& b, const Tolerances& tol) {
  const Horizon h = horizon_of(a, b, tol);
  bool ok = true;
  scan_prefixes(a, b, h.length, [&](std::size_t, double pa, double pb) {
    ok = pa <= pb + h.slack;
    return ok;
  });
  return ok;
}

ComparisonVerdict compare(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                          const Tolerances& tol) {
  const Horizon h = horizon_of(a, b, tol);
  ComparisonVerdict verdict;
  const double saturated = 1.0 - tol.cmp;
  scan_prefixes(a, b, h.length, [&](std::size_t k, double pa, double pb) {
    if (pa > pb + h.slack) verdict.forward_violations.push_back(k);
    if (pb > pa + h.slack) verdict.backward_violations.push_back(k);
    if (std::fabs(pa - pb) <= tol.cmp && !(pa >= saturated && pb >= saturated)) {
      verdict.near_tie = true;
    }
    return true;
  });
  const bool forward = verdict.forward_violations.empty();
  const bool backward = verdict.backward_violations.empty();
  if (forward && backward) {
    verdict.relation = Relation::kEquivalent;
  } else if (forward) {
    verdict.relation = Relation::kForwardConvertible;
  } else if (backward) {
    verdict.relation = Relation::kBackwardConvertible;
  } else {
    verdict.relation = Relation::kIncomparable;
  }
  return verdict;
}

}  // namespace locc
