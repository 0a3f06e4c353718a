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

// Global minimization over Euler angles: a dense grid over
// beta, alpha in [0, 2pi) and theta in [0, pi], followed by Nelder-Mead
// refinement from the best grid points.

#pragma once

#include <array>
#include <functional>

#include "su2pol/su2.hpp"

namespace su2pol {

struct OptimizerOptions {
  std::array<int, 3> grid_counts{48, 24, 48};  // beta, theta, alpha
  int refine_starts = 8;
  double refine_tolerance = 1e-10;
  int max_iterations = 500;

  /// Throws InvalidOptions unless every field is positive.
  void validate() const;
};

/// Objective given the two phase angles and the precomputed rotation factor
/// rotation_matrix(N, theta). Must be deterministic.
using EulerObjective =
    std::function<double(double beta, const RealMatrix& rotation, double alpha)>;

struct EulerSearchResult {
  EulerAngles angles;
  double value = 0.0;
};

/// Minimizes `objective` on H_N. Grid ties resolve to the lowest
/// (beta, theta, alpha) in lexicographic order; beta and alpha in the result
/// are wrapped into [0, 2pi). Deterministic for fixed options.
EulerSearchResult minimize_over_euler_angles(int n_photons,
                                             const EulerObjective& objective,
                                             const OptimizerOptions& opts);

/// <u|D(beta) rotation D(alpha)|v>, where D(x) = exp(-i x Jz).
Complex euler_matrix_element(const ComplexVector& u, double beta,
                             const RealMatrix& rotation, double alpha,
                             const ComplexVector& v);

}  // namespace su2pol
