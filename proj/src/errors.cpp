// Copyright 2026 The su2pol Authors
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

#include "su2pol/errors.hpp"

namespace su2pol {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kZeroVector:
      return "ZeroVector";
    case ErrorCode::kNotNormalized:
      return "NotNormalized";
    case ErrorCode::kIndexOutOfManifold:
      return "IndexOutOfManifold";
    case ErrorCode::kManifoldMismatch:
      return "ManifoldMismatch";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kNotUnitary:
      return "NotUnitary";
    case ErrorCode::kInvalidMixedState:
      return "InvalidMixedState";
    case ErrorCode::kEvenN:
      return "EvenN";
    case ErrorCode::kOddN:
      return "OddN";
    case ErrorCode::kNotEquipartition:
      return "NotEquipartition";
    case ErrorCode::kInvalidOptions:
      return "InvalidOptions";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what),
      code_(code) {}

}  // namespace su2pol
