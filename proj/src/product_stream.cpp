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

#include "locc/product_stream.hpp"

#include <tuple>

namespace locc {

bool SortedProductStream::Lower::operator()(const Candidate& lhs, const Candidate& rhs) const {
  // Max-heap on value; smaller indices first among equal values.
  if (lhs.value != rhs.value) return lhs.value < rhs.value;
  return std::tie(lhs.i, lhs.j) > std::tie(rhs.i, rhs.j);
}

SortedProductStream::SortedProductStream(std::span<const double> x, std::span<const double> y)
    : x_(x), y_(y) {
  if (!x_.empty() && !y_.empty()) push(0, 0);
}

void SortedProductStream::push(std::size_t i, std::size_t j) {
  frontier_.push({x_[i] * y_[j], i, j});
}

double SortedProductStream::next() {
  const Candidate top = frontier_.top();
  frontier_.pop();
  if (top.j == 0 && top.i + 1 < x_.size()) push(top.i + 1, 0);
  if (top.j + 1 < y_.size()) push(top.i, top.j + 1);
  return top.value;
}

std::vector<double> top_products(std::span<const double> x, std::span<const double> y,
                                 std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  SortedProductStream stream(x, y);
  while (out.size() < count && !stream.done()) out.push_back(stream.next());
  return out;
}

}  // namespace locc
