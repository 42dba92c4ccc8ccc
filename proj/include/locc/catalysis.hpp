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
#include <optional>
#include <string_view>
#include <vector>

#include "locc/spectrum.hpp"
#include "locc/tolerances.hpp"

namespace locc {

enum class Direction {
  kForward,   // a's state becomes b's state
  kBackward,  // b's state becomes a's state
};

std::string_view to_string(Direction direction);

struct ConditionC {
  bool satisfied = false;
  // The Schmidt numbers differ but the top entries are within tau_cmp.
  bool near_tie = false;

  explicit operator bool() const { return satisfied; }
};

// (a_1 > b_1 and #a > #b) or (a_1 < b_1 and #a < #b), with the top-entry
// gaps required to exceed tau_cmp. Sufficient for strong incomparability.
// Throws kInfiniteSchmidtNumber if either spectrum has a tail.
ConditionC condition_c(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                       const Tolerances& tol = {});

// Spectrum of the m-fold tensor power: all m-fold products, sorted.
SchmidtSpectrum tensor_power_spectrum(const SchmidtSpectrum& a, unsigned m,
                                      std::size_t size_cap = kDefaultSizeCap);

// Spectrum of a (x) c: all pairwise products, sorted.
SchmidtSpectrum tensor_product_spectrum(const SchmidtSpectrum& a, const SchmidtSpectrum& c,
                                        std::size_t size_cap = kDefaultSizeCap);

/// Evidence that a conversion is possible: the `copies`-fold powers of the
/// two states (each joined with `catalyst`, when present) are related by
/// majorization in `direction`.
struct ConvertibleWitness {
  Direction direction = Direction::kForward;
  unsigned copies = 1;
  std::optional<SchmidtSpectrum> catalyst;
};

// Source and target spectra the witness claims are related, forward
// orientation first: (a^m (x) c, b^m (x) c).
std::pair<SchmidtSpectrum, SchmidtSpectrum> witness_spectra(
    const SchmidtSpectrum& a, const SchmidtSpectrum& b, const ConvertibleWitness& witness,
    std::size_t size_cap = kDefaultSizeCap);

// Recomputes the witness spectra and checks the claimed majorization.
bool verify_witness(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                    const ConvertibleWitness& witness, const Tolerances& tol = {},
                    std::size_t size_cap = kDefaultSizeCap);

// Smallest m in 1..m_max with a^m majorized by b^m (forward) or the reverse;
// forward wins ties. Throws SizeCapExceeded if the m_max power is too large.
std::optional<ConvertibleWitness> multicopy_convertible(const SchmidtSpectrum& a,
                                                        const SchmidtSpectrum& b, unsigned m_max,
                                                        const Tolerances& tol = {},
                                                        std::size_t size_cap = kDefaultSizeCap);

// Direction in which catalyst c enables conversion, forward checked first.
std::optional<Direction> catalyst_convertible(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                                              const SchmidtSpectrum& c,
                                              const Tolerances& tol = {},
                                              std::size_t size_cap = kDefaultSizeCap);

// Sorted probability vectors of exactly `dim` positive entries, each a
// multiple of 1/grid_steps, in lexicographically ascending order.
std::vector<std::vector<double>> catalyst_grid(unsigned dim, unsigned grid_steps);

/// Bounded search for a catalyst. Tries the trivial catalyst (1), then every
/// grid vector of dimension 2..dim_max in `catalyst_grid` order, and returns
/// the first that works. An empty result only means none was found within
/// the bounds; it is not a proof that no catalyst exists.
std::optional<ConvertibleWitness> catalyst_search(const SchmidtSpectrum& a,
                                                  const SchmidtSpectrum& b, unsigned dim_max,
                                                  unsigned grid_steps,
                                                  const Tolerances& tol = {},
                                                  std::size_t size_cap = kDefaultSizeCap);

enum class StrongOutcome { kStrongByC, kConvertibleWitness, kInconclusive };

std::string_view to_string(StrongOutcome outcome);

struct SearchBounds {
  unsigned m_max = 3;
  unsigned catalyst_dim_max = 3;
  unsigned grid_steps = 100;
};

struct StrongVerdict {
  StrongOutcome outcome = StrongOutcome::kInconclusive;
  std::optional<ConvertibleWitness> witness;
  SearchBounds checked_bounds;
  bool near_tie = false;
};

// Condition (C) as the proof of strong incomparability, the copy and
// catalyst searches as proofs of convertibility, otherwise inconclusive.
// Witnesses are sought with one copy, then one copy plus a catalyst, then
// 2..m_max copies. Both proofs firing at once throws kInternalInconsistency.
StrongVerdict strong_verdict(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                             const SearchBounds& bounds, const Tolerances& tol = {},
                             std::size_t size_cap = kDefaultSizeCap);

}  // namespace locc
