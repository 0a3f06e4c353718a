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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace su2pol {

enum class ErrorCode {
  kLengthMismatch,
  kZeroVector,
  kNotNormalized,
  kIndexOutOfManifold,
  kManifoldMismatch,
  kDimensionMismatch,
  kNotUnitary,
  kInvalidMixedState,
  kEvenN,
  kOddN,
  kNotEquipartition,
  kInvalidOptions,
  kInvalidArgument,
  kParseError,
};

/// Name of the violated invariant, as printed in diagnostics ("LengthMismatch").
std::string_view error_name(ErrorCode code);

/// All precondition and validation failures in the library throw this.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace su2pol
