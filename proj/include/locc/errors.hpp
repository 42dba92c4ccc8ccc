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
#include <stdexcept>
#include <string>
#include <string_view>

namespace locc {

enum class ErrorCode {
  kNotNormalized,
  kDimensionTooSmall,
  kInvalidSpectrum,
  kInvalidTolerances,
  kInvalidArgument,
  kInfiniteSchmidtNumber,
  kSizeCapExceeded,
  kHorizonExceeded,
  kTopEntriesTied,
  kNotComplete,
  kNotFoundWithin,
  kParse,
  kInternalInconsistency,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` tells the
// CLI which exit status to use.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::size_t required, std::size_t cap);

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

}  // namespace locc
