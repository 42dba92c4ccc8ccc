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

namespace locc {

// Numerical slack used throughout. The mathematics is exact; these only
// absorb double-precision rounding.
struct Tolerances {
  // Allowed deviation of total probability mass from 1.
  double norm = 1e-9;
  // Entries at or below this count as zero for Schmidt numbers.
  double zero = 1e-12;
  // Slack on prefix-sum and top-entry comparisons.
  double cmp = 1e-12;

  // Throws Error(kInvalidTolerances) unless all are positive and zero < 1.
  void validate() const;
};

inline constexpr std::size_t kDefaultSizeCap = 10'000'000;

}  // namespace locc
