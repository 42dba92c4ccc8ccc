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

#include "locc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "locc/errors.hpp"
#include "locc/majorization.hpp"
#include "locc/schmidt.hpp"

namespace locc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Tally {
  std::size_t incomparable = 0;
  std::size_t forward = 0;
  std::size_t backward = 0;
  std::size_t equivalent = 0;
  std::size_t near_ties = 0;
  std::size_t near_product = 0;

  Tally& operator+=(const Tally& other) {
    incomparable += other.incomparable;
    forward += other.forward;
    backward += other.backward;
    equivalent += other.equivalent;
    near_ties += other.near_ties;
    near_product += other.near_product;
    return *this;
  }
};

Tally classify_range(std::size_t n, std::size_t begin, std::size_t end, std::uint64_t seed,
                     const Tolerances& tol) {
  Tally tally;
  for (std::size_t i = begin; i < end; ++i) {
    RandomStream stream(sample_seed(seed, n, i));
    const SchmidtSpectrum a = sample_random_spectrum(n, stream, tol);
    const SchmidtSpectrum b = sample_random_spectrum(n, stream, tol);
    const ComparisonVerdict verdict = compare(a, b, tol);
    switch (verdict.relation) {
      case Relation::kIncomparable:
        ++tally.incomparable;
        break;
      case Relation::kForwardConvertible:
        ++tally.forward;
        break;
      case Relation::kBackwardConvertible:
        ++tally.backward;
        break;
      case Relation::kEquivalent:
        ++tally.equivalent;
        break;
    }
    if (verdict.near_tie) ++tally.near_ties;
    if (schmidt_number(a, tol).value() == 1 || schmidt_number(b, tol).value() == 1) {
      ++tally.near_product;
    }
  }
  return tally;
}

}  // namespace

bool operator==(const SweepRecord& lhs, const SweepRecord& rhs) {
  return lhs.n == rhs.n && lhs.samples == rhs.samples && lhs.incomparable == rhs.incomparable &&
         lhs.forward == rhs.forward && lhs.backward == rhs.backward &&
         lhs.equivalent == rhs.equivalent && lhs.near_ties == rhs.near_ties &&
         lhs.near_product == rhs.near_product && lhs.fraction == rhs.fraction &&
         lhs.ci95_halfwidth == rhs.ci95_halfwidth && lhs.seed == rhs.seed &&
         lhs.tol.norm == rhs.tol.norm && lhs.tol.zero == rhs.tol.zero &&
         lhs.tol.cmp == rhs.tol.cmp;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ index);
}

SchmidtSpectrum sample_random_spectrum(std::size_t n, RandomStream& stream,
                                       const Tolerances& tol) {
  if (n < 2) throw Error(ErrorCode::kDimensionTooSmall, "dimension must be at least 2");
  std::normal_distribution<double> gaussian(0.0, 1.0);
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = gaussian(stream);
      const double im = gaussian(stream);
      m(r, c) = {re, im};
    }
  }
  m /= m.norm();
  return schmidt_spectrum(CoefficientMatrix(std::move(m)), tol);
}

double wilson_halfwidth(std::size_t successes, std::size_t trials) {
  if (trials == 0) return 0.0;
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  return z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
}

SweepRecord incomparability_fraction(std::size_t n, std::size_t samples, std::uint64_t seed,
                                     const Tolerances& tol, unsigned threads) {
  tol.validate();
  if (n < 2) throw Error(ErrorCode::kDimensionTooSmall, "dimension must be at least 2");
  if (samples == 0) throw Error(ErrorCode::kInvalidArgument, "samples must be positive");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, samples);

  std::vector<Tally> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = samples * w / workers;
    const std::size_t end = samples * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        partial[w] = classify_range(n, begin, end, seed, tol);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  Tally total;
  for (const Tally& t : partial) total += t;
  SweepRecord record;
  record.n = n;
  record.samples = samples;
  record.incomparable = total.incomparable;
  record.forward = total.forward;
  record.backward = total.backward;
  record.equivalent = total.equivalent;
  record.near_ties = total.near_ties;
  record.near_product = total.near_product;
  record.fraction = static_cast<double>(total.incomparable) / static_cast<double>(samples);
  record.ci95_halfwidth = wilson_halfwidth(total.incomparable, samples);
  record.seed = seed;
  record.tol = tol;
  return record;
}

std::vector<SweepRecord> sweep(std::span<const std::size_t> n_list, std::size_t samples,
                               std::uint64_t seed, const Tolerances& tol, unsigned threads) {
  if (n_list.empty()) throw Error(ErrorCode::kInvalidArgument, "dimension list is empty");
  if (!std::is_sorted(n_list.begin(), n_list.end())) {
    throw Error(ErrorCode::kInvalidArgument, "dimension list must be ascending");
  }
  std::vector<SweepRecord> out;
  out.reserve(n_list.size());
  for (std::size_t n : n_list) out.push_back(incomparability_fraction(n, samples, seed, tol, threads));
  return out;
}

}  // namespace locc
