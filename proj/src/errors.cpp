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

#include "locc/errors.hpp"

namespace locc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotNormalized:
      return "NotNormalized";
    case ErrorCode::kDimensionTooSmall:
      return "DimensionTooSmall";
    case ErrorCode::kInvalidSpectrum:
      return "InvalidSpectrum";
    case ErrorCode::kInvalidTolerances:
      return "InvalidTolerances";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInfiniteSchmidtNumber:
      return "InfiniteSchmidtNumber";
    case ErrorCode::kSizeCapExceeded:
      return "SizeCapExceeded";
    case ErrorCode::kHorizonExceeded:
      return "HorizonExceeded";
    case ErrorCode::kTopEntriesTied:
      return "TopEntriesTied";
    case ErrorCode::kNotComplete:
      return "NotComplete";
    case ErrorCode::kNotFoundWithin:
      return "NotFoundWithin";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kInternalInconsistency:
      return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

SizeCapExceeded::SizeCapExceeded(std::size_t required, std::size_t cap)
    : Error(ErrorCode::kSizeCapExceeded,
            "product spectrum needs " + std::to_string(required) +
                " entries, cap is " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

}  // namespace locc
