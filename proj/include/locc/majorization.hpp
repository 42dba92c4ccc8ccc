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

#include <cstddef>
#include <string_view>
#include <vector>

#include "locc/spectrum.hpp"
#include "locc/tolerances.hpp"

namespace locc {

// Deterministic LOCC relation between the states behind spectra a and b.
enum class Relation {
  kForwardConvertible,   // a -> b: a is majorized by b
  kBackwardConvertible,  // b -> a
  kEquivalent,           // both directions
  kIncomparable,         // neither
};

std::string_view to_string(Relation relation);

struct ComparisonVerdict {
  Relation relation = Relation::kEquivalent;
  // One-based k with sum_{j<=k} a_j > sum_{j<=k} b_j (+ slack).
  std::vector<std::size_t> forward_violations;
  // One-based k with sum_{j<=k} b_j > sum_{j<=k} a_j (+ slack).
  std::vector<std::size_t> backward_violations;
  // Some unsaturated prefix margin lies within tau_cmp.
  bool near_tie = false;

  friend bool operator==(const ComparisonVerdict&, const ComparisonVerdict&) = default;
};

inline constexpr std::size_t kMaxHorizon = 1'000'000;

// Number of prefix sums examined: the longer explicit length for finite
// spectra, or the first k past both heads at which every tail residual is
// below tau_cmp. Throws kHorizonExceeded past kMaxHorizon.
std::size_t comparison_horizon(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                               const Tolerances& tol = {});

// True iff every prefix sum of a is <= the matching prefix sum of b within
// tau_cmp (plus the residual tail mass at the horizon).
bool majorized_by(const SchmidtSpectrum& a, const SchmidtSpectrum& b, const Tolerances& tol = {});

ComparisonVerdict compare(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                          const Tolerances& tol = {});

}  // namespace locc
