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

#include "locc/tolerances.hpp"

#include <cmath>

#include "locc/errors.hpp"

namespace locc {

void Tolerances::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(norm) || !positive(zero) || !positive(cmp) || zero >= 1.0) {
    throw Error(ErrorCode::kInvalidTolerances,
                "tolerances must be positive and tau_zero < 1");
  }
}

}  // namespace locc
