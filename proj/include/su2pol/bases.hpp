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

// Complete N-photon bases generated from one state by phase shifts alone
// (powers of exp(-i step Jz)) or geometric rotations alone (exp(-i step Jy)).
//
// A seed works when it is an equipartition state of the generator: all of its
// components in the generator's eigenbasis have magnitude 1/sqrt(N+1). The
// N+1 states exp(-i 2pi k/(N+1) G)|s>, k = 0..N, are then orthonormal.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "su2pol/manifold.hpp"
#include "su2pol/su2.hpp"

namespace su2pol {

enum class Axis { kZ, kY };

std::string_view axis_name(Axis axis);
/// "z" or "y"; throws InvalidArgument otherwise.
Axis parse_axis(std::string_view name);

inline constexpr double kGramTolerance = 1e-10;

struct OrthonormalBasis {
  int n_photons = 0;
  std::vector<PureState> states;
  Axis generator_axis = Axis::kZ;
  std::string seed_description;
  /// Angle between consecutive members, 2pi / (N + 1).
  double step = 0.0;

  ComplexMatrix gram() const;
  /// max |Gram - I|.
  double gram_error() const;
};

/// Eigenvectors of Jz or Jy as columns, ascending eigenvalue, each scaled so
/// that its first nonzero component is real and positive.
ComplexMatrix generator_eigenbasis(int n_photons, Axis axis);

/// Components of s in generator_eigenbasis(N, axis).
ComplexVector generator_components(const PureState& s, Axis axis);

bool is_equipartition(const PureState& s, Axis axis, double tol = 1e-10);

/// Throws NotEquipartition unless is_equipartition(s, axis).
OrthonormalBasis cyclic_basis(const PureState& s, Axis axis,
                              std::string seed_description = "custom");

/// theta_z = pi/2 - arccos(1/sqrt(3)).
double two_photon_phase_seed_angle();
/// alpha_y = arctan(1/sqrt(2)) - pi/2.
double two_photon_rotation_seed_phase();

/// xi_1 = U(0, theta_z, pi/2) psi(pi/4) = (i/sqrt3)(1, -1, -1) and its phase
/// shifts by +-2pi/3. Throws std::logic_error if xi_1 is not reproduced
/// exactly, which signals a sign-convention regression.
OrthonormalBasis two_photon_phase_basis();

/// psi_1 = U(0, 0, alpha_y) psi(pi/4) = (1/sqrt6)(1 - i sqrt2, 0, 1 + i sqrt2)
/// and its rotations by +-2pi/3. Same convention check as above.
OrthonormalBasis two_photon_rotation_basis();

enum class ThreePhotonSeed {
  kZeta1,  // (|0,3> + |3,0>)/sqrt2
  kZeta2,  // (|1,2> + |2,1>)/sqrt2
};
enum class Sign { kPlus, kMinus };

std::string_view seed_name(ThreePhotonSeed seed);
/// "zeta1" or "zeta2"; throws InvalidArgument otherwise.
ThreePhotonSeed parse_seed(std::string_view name);

PureState three_photon_seed(ThreePhotonSeed seed);

/// theta_+- = arccos(+-1/sqrt3).
double three_photon_rotation_angle(Sign sign);
/// beta_y = arccos(-sqrt(2/3)).
double three_photon_circular_phase();

/// Axis z: U(0, theta_+-, pi/2)|seed>. Axis y: U(beta_y, pi/2, 0)|seed>
/// (the sign is ignored). The result is an equipartition state of the axis.
PureState three_photon_equipartition(ThreePhotonSeed seed, Sign sign, Axis axis);

/// Closed-form amplitudes of three_photon_equipartition, global phase
/// included.
ComplexVector three_photon_equipartition_closed_form(ThreePhotonSeed seed, Sign sign,
                                                     Axis axis);

/// cyclic_basis(three_photon_equipartition(seed, +, axis), axis): steps of
/// pi/2 in phase (axis z) or U(0, k pi/2, 0) rotations (axis y).
OrthonormalBasis three_photon_basis(ThreePhotonSeed seed, Axis axis);

}  // namespace su2pol
