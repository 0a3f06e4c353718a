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

// Degree of quantum polarization of pure states,
//
//   eta_q = sqrt(1 - min_{beta,theta,alpha} |<psi|U(beta,theta,alpha)|psi>|^2),
//
// and searches for SU(2) transformations that map a state to an orthogonal
// one (eta_q = 1).

#pragma once

#include <string_view>
#include <vector>

#include "su2pol/euler_search.hpp"
#include "su2pol/manifold.hpp"
#include "su2pol/su2.hpp"

namespace su2pol {

/// Residual below which a transformed state counts as orthogonal.
inline constexpr double kOrthogonalityThreshold = 1e-8;

struct PolarizationResult {
  double eta_q = 0.0;
  EulerAngles argmin;
  /// |<psi|U(argmin)|psi>|, recomputed with the full matrix product.
  double min_overlap_mag = 1.0;
  PureState transformed_state;
};

/// <s|U(angles)|s>.
Complex overlap(const PureState& s, const EulerAngles& angles);

/// Closed form of <psi(vartheta)|U(beta,theta,alpha)|psi(vartheta)> for the
/// two-photon orbit representatives psi(vartheta) = sin|0,2> + cos|2,0>.
Complex two_photon_overlap_closed_form(double vartheta, const EulerAngles& angles);

/// Grid-plus-simplex minimization of |overlap|^2. N = 0 yields eta_q = 0 at
/// the identity. Reproducible bit-for-bit for identical options.
PolarizationResult degree_of_polarization(const PureState& s,
                                          const OptimizerOptions& opts = {});

enum class OrthogonalizeRoute {
  kOddPhase,        // U(0, pi, alpha), alpha from the odd-N phase search
  kMiddleState,     // U(0, theta, 0), theta from the zeros of P_{N/2}
  kTwoPhotonClosedForm,
  kNumerical,
};

std::string_view route_name(OrthogonalizeRoute route);

struct OrthogonalizeOutcome {
  /// min_overlap_mag < kOrthogonalityThreshold. When false (NotFound),
  /// `result` holds the best residual; this never certifies eta_q < 1.
  bool found = false;
  OrthogonalizeRoute route = OrthogonalizeRoute::kNumerical;
  PolarizationResult result;
};

/// Tries the analytic routes (odd N; |N/2,N/2>; the eight N = 2 closed-form
/// solutions) before falling back to degree_of_polarization.
OrthogonalizeOutcome orthogonalize(const PureState& s,
                                   const OptimizerOptions& opts = {});

/// <s|U(0, pi, alpha)|s> for odd N from the pairwise sum
///
///   -2i sum_{k=0}^{(N-1)/2} (-1)^k r_k r_{N-k}
///        sin(phi_k - phi_{N-k} + (N - 2k) alpha / 2),
///
/// with c_n = r_n e^{i phi_n}. Purely imaginary and equal to the matrix
/// overlap with sign +1. Throws EvenN.
Complex odd_overlap_pi_rotation(const PureState& s, double alpha);

/// Global sign relating odd_overlap_pi_rotation to overlap(s, (0, pi, alpha)).
inline constexpr double kOddOverlapSign = 1.0;

/// alpha in [0, 2pi] with |overlap(s, (0, pi, alpha))| < 1e-10, by bisection
/// between sign-opposite samples; 0 if the overlap vanishes identically.
/// Throws EvenN.
double find_orthogonal_phase_odd(const PureState& s);

/// arccos of the zeros of P_{N/2}: rotations taking |N/2,N/2> to an
/// orthogonal state. Throws OddN for odd N, InvalidArgument for N < 2.
std::vector<double> middle_state_solutions(int n_photons);

/// True iff ||U rho U^dag - rho||_max < tol for `samples` Euler triples from a
/// fixed-seed generator.
bool is_unpolarized(const MixedState& rho, double tol = 1e-10, int samples = 64);

}  // namespace su2pol
