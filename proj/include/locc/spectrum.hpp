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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "locc/tolerances.hpp"

namespace locc {

// Entries first, first*ratio, first*ratio^2, ... continuing a spectrum past
// its explicit head.
struct GeometricTail {
  double first = 0.0;
  double ratio = 0.0;

  double mass() const { return first / (1.0 - ratio); }
  double entry(std::size_t i) const;
  // Mass of entries i, i+1, ...
  double mass_from(std::size_t i) const { return entry(i) / (1.0 - ratio); }
  // Mass of entries 0..t-1, in closed form.
  double partial_mass(std::size_t t) const;

  friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
};

class SchmidtNumber {
 public:
  static SchmidtNumber finite(std::size_t count) { return SchmidtNumber(count, false); }
  static SchmidtNumber infinite() { return SchmidtNumber(0, true); }

  bool is_infinite() const { return infinite_; }
  // Throws Error(kInfiniteSchmidtNumber) when infinite.
  std::size_t value() const;

  friend bool operator==(const SchmidtNumber&, const SchmidtNumber&) = default;
  friend std::strong_ordering operator<=>(const SchmidtNumber& lhs,
                                          const SchmidtNumber& rhs);

 private:
  SchmidtNumber(std::size_t count, bool infinite) : count_(count), infinite_(infinite) {}

  std::size_t count_;
  bool infinite_;
};

/// Squared Schmidt coefficients of a bipartite pure state, sorted
/// non-increasing and summing to one.
///
/// A spectrum is a finite head optionally followed by a geometric tail, so
/// that the infinite spectra produced by completion are held exactly. The
/// canonical form keeps `head().back() >= tail()->first`; tail entries that
/// would break the ordering are moved into the head on construction.
class SchmidtSpectrum {
 public:
  /// Ingests user values: sorts, clamps negatives within tau_zero, and
  /// rescales to unit mass. Throws kInvalidSpectrum for negative, non-finite
  /// or empty input and kNotNormalized when the mass is off by more than
  /// tau_norm. `adjusted()` reports whether the input needed fixing.
  static SchmidtSpectrum from_values(std::vector<double> values, const Tolerances& tol = {});

  /// As `from_values`, with a geometric tail after the head.
  static SchmidtSpectrum with_tail(std::vector<double> head, GeometricTail tail,
                                   const Tolerances& tol = {});

  /// Wraps values already sorted non-increasing with unit mass up to
  /// rounding. No rescaling is applied, so kernels keep bit-exact output.
  static SchmidtSpectrum from_sorted(std::vector<double> values);

  std::span<const double> head() const { return head_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }
  bool has_tail() const { return tail_.has_value(); }
  std::size_t head_size() const { return head_.size(); }
  bool adjusted() const { return adjusted_; }

  double top() const { return entry(0); }
  // Zero-based; zero past the end of a finite spectrum.
  double entry(std::size_t j) const;
  // Mass of all entries at index >= k.
  double residual_mass(std::size_t k) const;
  double total_mass() const;
  // First `count` entries, drawing on the tail as needed.
  std::vector<double> materialize(std::size_t count) const;

  friend bool operator==(const SchmidtSpectrum& lhs, const SchmidtSpectrum& rhs) {
    return lhs.head_ == rhs.head_ && lhs.tail_ == rhs.tail_;
  }

 private:
  SchmidtSpectrum() = default;

  static SchmidtSpectrum canonicalize(std::vector<double> head,
                                      std::optional<GeometricTail> tail,
                                      const Tolerances& tol);

  std::vector<double> head_;
  std::optional<GeometricTail> tail_;
  bool adjusted_ = false;
};

// Count of entries above tau_zero; infinite when a tail is present.
SchmidtNumber schmidt_number(const SchmidtSpectrum& spectrum, const Tolerances& tol = {});

// Cumulative sums of the first k_max entries, padded past the end with the
// total. Tail contributions are summed in closed form.
std::vector<double> prefix_sums(const SchmidtSpectrum& spectrum, std::size_t k_max);

// Distance between the states sum_j sqrt(a_j) x_j (x) y_j and
// sum_j sqrt(b_j) x_j (x) y_j, i.e. sqrt(2 - 2 sum_j sqrt(a_j b_j)).
double spectrum_distance(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

}  // namespace locc
