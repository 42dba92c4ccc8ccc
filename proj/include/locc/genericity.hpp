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
#include <span>
#include <vector>

#include "locc/spectrum.hpp"
#include "locc/tolerances.hpp"

namespace locc {

// Approximates a finite-Schmidt-number state by a complete one: the base
// entries are scaled by m/(m+1) and followed by 1/(2^i (m+1)), i = 1, 2, ...
// Every entry is positive and the total mass is m/(m+1) + 1/(m+1) = 1.
// Throws kInvalidArgument for a tailed base or m == 0.
SchmidtSpectrum complete_extension(const SchmidtSpectrum& base, unsigned m,
                                   const Tolerances& tol = {});

// Number of leading entries above tau_zero, i.e. how far the spectrum is
// numerically complete.
std::size_t complete_depth(const SchmidtSpectrum& spectrum, const Tolerances& tol = {});

/// Renormalized truncations of a pair of complete spectra. The spectrum with
/// the larger top entry keeps m entries and the other keeps m - 1, so the
/// pair has Schmidt numbers m and m - 1.
struct TruncationPair {
  SchmidtSpectrum a;
  SchmidtSpectrum b;
  unsigned m = 0;
  // True when a has the larger top entry and hence m entries.
  bool a_is_long = true;
};

// Throws kTopEntriesTied if |a_1 - b_1| <= tau_cmp, kNotComplete if a kept
// entry is at or below tau_zero, and kInvalidArgument for m < 2.
TruncationPair truncation_pair(const SchmidtSpectrum& a, const SchmidtSpectrum& b, unsigned m,
                               const Tolerances& tol = {});

struct MinimalCIndex {
  unsigned index = 0;
  // Indices in (index, index + 5] where condition (C) failed again.
  std::vector<unsigned> permanence_failures;
};

// Smallest m in 2..m_max whose truncation pair satisfies condition (C).
// The scan also stops where either input runs out of entries above
// tau_zero. Throws kNotFoundWithin when no such m exists.
MinimalCIndex minimal_c_index(const SchmidtSpectrum& a, const SchmidtSpectrum& b, unsigned m_max,
                              const Tolerances& tol = {});

struct ConvergenceRow {
  unsigned m = 0;
  double dist_a = 0.0;
  double dist_b = 0.0;
  bool condition_c = false;
  bool incomparable = false;
};

// One row per distinct m, ascending.
std::vector<ConvergenceRow> convergence_report(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                                               std::span<const unsigned> m_list,
                                               const Tolerances& tol = {});

}  // namespace locc
