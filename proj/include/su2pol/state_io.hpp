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

// JSON state files:
//
//   {"n_photons": N, "amplitudes": [[re, im], ...]}   (N + 1 pairs)
//
// Bases are exported as
//
//   {"axis": "z", "seed": "...", "step": 2.094..., "n_photons": 2,
//    "states": [<state object>, ...]}

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "su2pol/bases.hpp"
#include "su2pol/manifold.hpp"

namespace su2pol {

/// Validates with make_state rules (no implicit normalization). Throws
/// ParseError on schema violations and the make_state errors otherwise.
PureState state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const PureState& s);

PureState read_state_file(const std::filesystem::path& path);
PureState parse_state(const std::string& text);

nlohmann::json basis_to_json(const OrthonormalBasis& basis);

}  // namespace su2pol
