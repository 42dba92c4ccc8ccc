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
#include <queue>
#include <span>
#include <vector>

namespace locc {

/// Yields the products x[i] * y[j] of two non-increasing vectors in
/// non-increasing order, one at a time.
///
/// The frontier of candidate index pairs lives in a heap: popping (i, j)
/// exposes (i, j + 1), and (i + 1, 0) when j == 0, so each pair enters the
/// heap exactly once. Extracting the first k products costs O(k log k), which
/// is what prefix-sum checks need when they stop at the first violation.
class SortedProductStream {
 public:
  SortedProductStream(std::span<const double> x, std::span<const double> y);

  bool done() const { return frontier_.empty(); }
  // Precondition: !done().
  double next();

 private:
  struct Candidate {
    double value;
    std::size_t i;
    std::size_t j;
  };
  struct Lower {
    bool operator()(const Candidate& lhs, const Candidate& rhs) const;
  };

  void push(std::size_t i, std::size_t j);

  std::span<const double> x_;
  std::span<const double> y_;
  std::priority_queue<Candidate, std::vector<Candidate>, Lower> frontier_;
};

// The `count` largest products, non-increasing.
std::vector<double> top_products(std::span<const double> x, std::span<const double> y,
                                 std::size_t count);

}  // namespace locc
