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
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "locc/spectrum.hpp"
#include "locc/tolerances.hpp"

namespace locc {

using RandomStream = std::mt19937_64;

// Seed for sample `index` of a sweep at dimension n. Mixing (seed, n, index)
// through splitmix64 makes every sample's stream independent of evaluation
// order and thread count.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t index);

// Schmidt spectrum of a Haar-random pure state on C^n (x) C^n: an n x n
// matrix of i.i.d. standard complex Gaussians (Ginibre), normalized, then
// squared singular values.
SchmidtSpectrum sample_random_spectrum(std::size_t n, RandomStream& stream,
                                       const Tolerances& tol = {});

struct SweepRecord {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t incomparable = 0;
  std::size_t forward = 0;
  std::size_t backward = 0;
  std::size_t equivalent = 0;
  // Pairs whose verdict carried a near-tie flag.
  std::size_t near_ties = 0;
  // Pairs in which either state had Schmidt number 1.
  std::size_t near_product = 0;
  double fraction = 0.0;
  double ci95_halfwidth = 0.0;
  std::uint64_t seed = 0;
  Tolerances tol;

  friend bool operator==(const SweepRecord& lhs, const SweepRecord& rhs);
};

// Half-width of the 95% Wilson score interval for successes/trials.
double wilson_halfwidth(std::size_t successes, std::size_t trials);

// Fraction of independent Haar-random pairs at dimension n that are
// incomparable. threads == 0 uses the hardware concurrency; the record is
// identical for every thread count.
SweepRecord incomparability_fraction(std::size_t n, std::size_t samples, std::uint64_t seed,
                                     const Tolerances& tol = {}, unsigned threads = 0);

// One record per dimension; n_list must be non-empty and ascending.
std::vector<SweepRecord> sweep(std::span<const std::size_t> n_list, std::size_t samples,
                               std::uint64_t seed, const Tolerances& tol = {},
                               unsigned threads = 0);

}  // namespace locc
