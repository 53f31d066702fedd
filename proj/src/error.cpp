// Copyright 2026 The coarsequant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coarsequant/error.hpp"

namespace coarsequant {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNotAnElement: return "NotAnElement";
    case ErrorCode::kInvalidFactor: return "InvalidFactor";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kMixedStride: return "MixedStride";
    case ErrorCode::kTooFew: return "TooFew";
    case ErrorCode::kNegativeCount: return "NegativeCount";
    case ErrorCode::kContaminationExceedsData: return "ContaminationExceedsData";
    case ErrorCode::kDegenerateInterval: return "DegenerateInterval";
    case ErrorCode::kUnachievable: return "Unachievable";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kPartitionTooSmall: return "PartitionTooSmall";
  }
  return "Unknown";
}

}  // namespace coarsequant
