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

// SU(2) representations on H_N built from the Schwinger boson operators
//
//   Jx = (a^dag b + a b^dag) / 2,  Jy = (a^dag b - a b^dag) / 2i,
//   Jz = (a^dag a - b^dag b) / 2,
//
// with a (b) the horizontal (vertical) mode. Stokes operators are 2J.
// A differential phase shift by alpha is exp(-i alpha Jz), a geometric
// rotation by theta/2 is exp(-i theta Jy), and a general transformation is
// the Euler product U(beta, theta, alpha) = e^{-i beta Jz} e^{-i theta Jy}
// e^{-i alpha Jz}.

#pragma once

#include <vector>

#include "su2pol/manifold.hpp"
#include "su2pol/unitary.hpp"

namespace su2pol {

/// Euler angles in radians. Any finite values are accepted; optimizers search
/// beta, alpha in [0, 2pi) and theta in [0, pi].
struct EulerAngles {
  double beta = 0.0;
  double theta = 0.0;
  double alpha = 0.0;

  friend bool operator==(const EulerAngles&, const EulerAngles&) = default;
};

struct AngularMomentum {
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
};

AngularMomentum angular_momentum_matrices(int n_photons);

/// Eigenvalue of Jz on |n, N-n>.
inline double jz_eigenvalue(int n_photons, int n) {
  return n - 0.5 * n_photons;
}

/// exp(-i alpha Jz), diagonal.
UnitaryMatrix phase_shift_unitary(int n_photons, double alpha);

/// Real matrix of exp(-i theta Jy) (the Wigner small-d matrix in this basis).
/// Exactly the identity at theta = 0.
RealMatrix rotation_matrix(int n_photons, double theta);

/// exp(-i theta Jy) as a complex unitary; imaginary parts are zero.
UnitaryMatrix rotation_unitary(int n_photons, double theta);

UnitaryMatrix euler_unitary(int n_photons, const EulerAngles& angles);

/// exp(vartheta (J_-^2 - J_+^2) / 2) on H_2, with J_+- = Jx +- i Jy.
UnitaryMatrix transition_unitary_two_photon(double vartheta);

/// exp(A) for anti-Hermitian A, via the Hermitian eigendecomposition of iA.
ComplexMatrix expm_anti_hermitian(const ComplexMatrix& a);

/// P_m(x) by the three-term recurrence. Throws InvalidArgument for m < 0 or
/// |x| > 1.
double legendre(int m, double x);

/// The m zeros of P_m in (-1, 1), ascending. Throws InvalidArgument for m < 1.
std::vector<double> legendre_zeros(int m);

}  // namespace su2pol
