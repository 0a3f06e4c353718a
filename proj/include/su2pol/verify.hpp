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

// Identity checks run by `su2pol verify` and the acceptance suite. Each
// check reports the worst error it saw next to its pinned tolerance.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "su2pol/manifold.hpp"
#include "su2pol/su2.hpp"

namespace su2pol {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Worst observed error (or the decisive quantity, see `detail`).
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Complex-Gaussian amplitudes, normalized.
PureState random_state(int n_photons, std::mt19937_64& rng);
/// beta, alpha uniform in [0, 2pi), theta uniform in [0, pi].
EulerAngles random_angles(std::mt19937_64& rng);

/// max_n |a_n - e^{i phi} b_n| with phi aligning b to a.
double distance_up_to_phase(const ComplexVector& a, const ComplexVector& b);

inline constexpr std::uint64_t kVerifySeed = 20260416;

/// U(0,pi,0)|n,N-n> = (-1)^(N-n)|N-n,n> for N <= 20, the form that holds in
/// this library's convention. With `alternating_in_n` the sign (-1)^n is
/// used instead; the two agree for even N and differ by -1 for odd N.
CheckResult check_reflection_identity(bool alternating_in_n = false);
CheckResult check_legendre_identity();
CheckResult check_odd_unit_degree();
CheckResult check_two_photon_unit_degree();
CheckResult check_middle_state();
CheckResult check_closed_form_overlap();
CheckResult check_transition_operator();
CheckResult check_basis_fixtures();
CheckResult check_psi_pi4_orbit();
CheckResult check_unpolarized_state();
CheckResult check_orbit_classification();
CheckResult check_odd_pairwise_formula();

std::vector<CheckResult> run_identity_suite();

/// One line per check: "[PASS] 01 name  worst=... tol=...".
std::string format_check(const CheckResult& r);

}  // namespace su2pol
