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

// SU(2) orbits on H_N.
//
// Type 1 orbits contain a Fock state |n, N-n> and are labeled by
// n in 0..floor(N/2) (|n,N-n> and |N-n,n> share an orbit). All other orbits
// are type 2. Membership in a type 2 orbit is decided by exclusion only, up to
// optimizer tolerance.

#pragma once

#include <optional>
#include <string_view>

#include "su2pol/euler_search.hpp"
#include "su2pol/manifold.hpp"
#include "su2pol/su2.hpp"

namespace su2pol {

inline constexpr double kOrbitFidelityThreshold = 1.0 - 1e-8;

enum class OrbitKind { kType1, kType2 };

std::string_view orbit_kind_name(OrbitKind kind);

struct OrbitClass {
  OrbitKind kind = OrbitKind::kType2;
  /// Set for type 1 only.
  std::optional<int> label;
  /// Best |<n|U|s>|^2 found; for type 2 the maximum over all labels.
  double witness_fidelity = 0.0;
  int witness_label = 0;
  EulerAngles witness_angles;
};

/// sin(vartheta)|0,2> + cos(vartheta)|2,0>. Every N = 2 orbit contains one
/// of these with 0 <= vartheta <= pi/4.
PureState psi_orbit_state(double vartheta);

/// Maximizes the fidelity of U|s> to |n, N-n> for n = 0..floor(N/2) in turn
/// and returns the first label above kOrbitFidelityThreshold.
OrbitClass classify_orbit(const PureState& s, const OptimizerOptions& opts = {});

}  // namespace su2pol
