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

// Pure and mixed states on the two-mode N-photon manifold.
//
// The manifold H_N is spanned by |n, N-n> for n = 0..N, where n counts
// horizontally polarized photons. Every vector and matrix in this library uses
// the ordering (|0,N>, |1,N-1>, ..., |N,0>), so amplitude index n is the
// horizontal photon count.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace su2pol {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Ingestion tolerance on the norm when normalization is not requested.
inline constexpr double kIngestNormTolerance = 1e-9;
/// Two states are "equal up to phase" when their fidelity exceeds 1 - this.
inline constexpr double kSamePhaseTolerance = 1e-10;

class UnitaryMatrix;

/// Normalized amplitude vector of a pure N-photon state. Immutable.
class PureState {
 public:
  /// The vacuum |0,0>.
  PureState() : n_photons_(0), amplitudes_(ComplexVector::Ones(1)) {}

  int n_photons() const noexcept { return n_photons_; }
  int dimension() const noexcept { return n_photons_ + 1; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](int n) const { return amplitudes_(n); }

  std::vector<Complex> to_vector() const;

 private:
  PureState(int n_photons, ComplexVector amplitudes)
      : n_photons_(n_photons), amplitudes_(std::move(amplitudes)) {}

  friend PureState make_state(int, const ComplexVector&, bool);

  int n_photons_;
  ComplexVector amplitudes_;
};

/// Builds a state from raw amplitudes.
///
/// With `normalize` off, the vector must already have unit norm within
/// kIngestNormTolerance; it is then rescaled to unit norm. Throws
/// LengthMismatch, ZeroVector or NotNormalized.
PureState make_state(int n_photons, const ComplexVector& amplitudes,
                     bool normalize = false);
PureState make_state(int n_photons, std::span<const Complex> amplitudes,
                     bool normalize = false);
PureState make_state(int n_photons, std::initializer_list<Complex> amplitudes,
                     bool normalize = false);

/// |n, N-n>. Throws IndexOutOfManifold unless 0 <= n <= N.
PureState fock_state(int n_photons, int n);

/// <a|b>. Throws ManifoldMismatch.
Complex inner_product(const PureState& a, const PureState& b);

/// |<a|b>|^2, clamped to [0, 1].
double fidelity(const PureState& a, const PureState& b);

bool equal_up_to_phase(const PureState& a, const PureState& b);

/// Density matrix on H_N: Hermitian, unit trace, positive semidefinite.
class MixedState {
 public:
  /// Validates the invariants to 1e-12 and throws InvalidMixedState otherwise.
  MixedState(int n_photons, ComplexMatrix matrix);

  int n_photons() const noexcept { return n_photons_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  int n_photons_;
  ComplexMatrix matrix_;
};

/// The unique SU(2)-invariant state, identity / (N + 1).
MixedState maximally_mixed(int n_photons);

/// |s><s|.
MixedState projector(const PureState& s);

/// U|s>. Throws DimensionMismatch.
PureState apply_unitary(const UnitaryMatrix& u, const PureState& s);

/// U rho U^dagger. Throws DimensionMismatch.
MixedState conjugate_mixed(const UnitaryMatrix& u, const MixedState& rho);

}  // namespace su2pol
