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

#include <fstream>
#include <sstream>

#include "su2pol/errors.hpp"

namespace su2pol {

PureState state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "state must be a JSON object");
  if (!j.contains("n_photons") || !j.at("n_photons").is_number_integer()) {
    throw Error(ErrorCode::kParseError, "\"n_photons\" must be an integer");
  }
  if (!j.contains("amplitudes") || !j.at("amplitudes").is_array()) {
    throw Error(ErrorCode::kParseError, "\"amplitudes\" must be an array");
  }
  const auto n_photons = j.at("n_photons").get<long long>();
  if (n_photons < 0 || n_photons > 100000) {
    throw Error(ErrorCode::kParseError, "\"n_photons\" out of range");
  }
  const auto& amps = j.at("amplitudes");
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  for (size_t i = 0; i < amps.size(); ++i) {
    const auto& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw Error(ErrorCode::kParseError,
                  "amplitude " + std::to_string(i) + " must be a [re, im] pair");
    }
    v(static_cast<Eigen::Index>(i)) = {pair[0].get<double>(), pair[1].get<double>()};
  }
  return make_state(static_cast<int>(n_photons), v);
}

nlohmann::json state_to_json(const PureState& s) {
  nlohmann::json amps = nlohmann::json::array();
  for (int n = 0; n < s.dimension(); ++n) amps.push_back({s[n].real(), s[n].imag()});
  return {{"n_photons", s.n_photons()}, {"amplitudes", std::move(amps)}};
}

PureState parse_state(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return state_from_json(j);
}

PureState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

nlohmann::json basis_to_json(const OrthonormalBasis& basis) {
  nlohmann::json states = nlohmann::json::array();
  for (const PureState& s : basis.states) states.push_back(state_to_json(s));
  return {{"axis", axis_name(basis.generator_axis)},
          {"seed", basis.seed_description},
          {"step", basis.step},
          {"n_photons", basis.n_photons},
          {"states", std::move(states)}};
}

}  // namespace su2pol
