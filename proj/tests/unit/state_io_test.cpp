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

#include "su2pol/state_io.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "su2pol/errors.hpp"
#include "su2pol/verify.hpp"

namespace su2pol {
namespace {

ErrorCode code_of_parse(const std::string& text) {
  try {
    parse_state(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kInvalidArgument;
}

TEST(StateIo, ParsesPairs) {
  const PureState s = parse_state(R"({"n_photons": 1, "amplitudes": [[0, 1], [0, 0]]})");
  EXPECT_EQ(s.n_photons(), 1);
  EXPECT_EQ(s[0], Complex(0.0, 1.0));
}

TEST(StateIo, SchemaErrors) {
  EXPECT_EQ(code_of_parse("not json"), ErrorCode::kParseError);
  EXPECT_EQ(code_of_parse(R"({"amplitudes": [[1, 0]]})"), ErrorCode::kParseError);
  EXPECT_EQ(code_of_parse(R"({"n_photons": 0, "amplitudes": [[1]]})"), ErrorCode::kParseError);
  EXPECT_EQ(code_of_parse(R"({"n_photons": 0, "amplitudes": [["1", 0]]})"),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of_parse(R"({"n_photons": 2, "amplitudes": [[1, 0], [0, 0]]})"),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(code_of_parse(R"({"n_photons": 1, "amplitudes": [[1, 0], [1, 0]]})"),
            ErrorCode::kNotNormalized);
}

TEST(StateIo, RoundTripIsExact) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 30; ++i) {
    const PureState s = random_state(i % 7, rng);
    const PureState back = parse_state(state_to_json(s).dump());
    EXPECT_EQ(back.amplitudes(), s.amplitudes());
  }
}

TEST(StateIo, BasisExport) {
  const nlohmann::json j = basis_to_json(two_photon_phase_basis());
  EXPECT_EQ(j.at("axis"), "z");
  EXPECT_EQ(j.at("n_photons"), 2);
  EXPECT_EQ(j.at("states").size(), 3u);
  EXPECT_EQ(state_from_json(j.at("states")[0]).n_photons(), 2);
}

}  // namespace
}  // namespace su2pol
