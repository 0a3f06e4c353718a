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

#include "su2pol/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "su2pol/errors.hpp"
#include "su2pol/unitary.hpp"

namespace su2pol {
namespace {

constexpr double kMixedTolerance = 1e-12;

// Below this deviation a vector is left untouched, which keeps repeated
// ingestion of already-normalized data bit-stable.
constexpr double kRescaleThreshold = 4 * std::numeric_limits<double>::epsilon();

void require_same_manifold(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::kManifoldMismatch,
                "states live on N=" + std::to_string(a) + " and N=" +
                    std::to_string(b));
  }
}

}  // namespace

std::vector<Complex> PureState::to_vector() const {
  return {amplitudes_.data(), amplitudes_.data() + amplitudes_.size()};
}

PureState make_state(int n_photons, const ComplexVector& amplitudes,
                     bool normalize) {
  if (n_photons < 0) {
    throw Error(ErrorCode::kInvalidArgument, "photon number must be >= 0");
  }
  if (amplitudes.size() != n_photons + 1) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(n_photons + 1) +
                    " amplitudes for N=" + std::to_string(n_photons) +
                    ", got " + std::to_string(amplitudes.size()));
  }
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    if (!std::isfinite(amplitudes(i).real()) ||
        !std::isfinite(amplitudes(i).imag())) {
      throw Error(ErrorCode::kInvalidArgument, "amplitudes must be finite");
    }
  }
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw Error(ErrorCode::kZeroVector, "amplitude vector has zero norm");
  }
  if (!normalize && std::abs(norm - 1.0) > kIngestNormTolerance) {
    throw Error(ErrorCode::kNotNormalized,
                "norm " + std::to_string(norm) + " deviates from 1 by more "
                "than 1e-9");
  }
  if (std::abs(norm - 1.0) <= kRescaleThreshold) {
    return PureState(n_photons, amplitudes);
  }
  return PureState(n_photons, amplitudes / norm);
}

PureState make_state(int n_photons, std::span<const Complex> amplitudes,
                     bool normalize) {
  const ComplexVector v = Eigen::Map<const ComplexVector>(
      amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()));
  return make_state(n_photons, v, normalize);
}

PureState make_state(int n_photons, std::initializer_list<Complex> amplitudes,
                     bool normalize) {
  return make_state(n_photons,
                    std::span<const Complex>(amplitudes.begin(), amplitudes.size()),
                    normalize);
}

PureState fock_state(int n_photons, int n) {
  if (n_photons < 0 || n < 0 || n > n_photons) {
    throw Error(ErrorCode::kIndexOutOfManifold,
                "index " + std::to_string(n) + " outside 0.." +
                    std::to_string(n_photons));
  }
  ComplexVector v = ComplexVector::Zero(n_photons + 1);
  v(n) = 1.0;
  return make_state(n_photons, v);
}

Complex inner_product(const PureState& a, const PureState& b) {
  require_same_manifold(a.n_photons(), b.n_photons());
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const PureState& a, const PureState& b) {
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

bool equal_up_to_phase(const PureState& a, const PureState& b) {
  return fidelity(a, b) > 1.0 - kSamePhaseTolerance;
}

MixedState::MixedState(int n_photons, ComplexMatrix matrix)
    : n_photons_(n_photons), matrix_(std::move(matrix)) {
  const Eigen::Index d = n_photons + 1;
  if (n_photons < 0 || matrix_.rows() != d || matrix_.cols() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "density matrix must be " + std::to_string(d) + "x" +
                    std::to_string(d));
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kMixedTolerance) {
    throw Error(ErrorCode::kInvalidMixedState, "matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kMixedTolerance) {
    throw Error(ErrorCode::kInvalidMixedState, "trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(matrix_,
                                                   Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kMixedTolerance) {
    throw Error(ErrorCode::kInvalidMixedState, "matrix has a negative eigenvalue");
  }
}

MixedState maximally_mixed(int n_photons) {
  if (n_photons < 0) {
    throw Error(ErrorCode::kInvalidArgument, "photon number must be >= 0");
  }
  const int d = n_photons + 1;
  return MixedState(n_photons,
                    ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

MixedState projector(const PureState& s) {
  return MixedState(s.n_photons(), s.amplitudes() * s.amplitudes().adjoint());
}

PureState apply_unitary(const UnitaryMatrix& u, const PureState& s) {
  if (u.n_photons() != s.n_photons()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "unitary on N=" + std::to_string(u.n_photons()) +
                    " applied to state on N=" + std::to_string(s.n_photons()));
  }
  return make_state(s.n_photons(), ComplexVector(u.entries() * s.amplitudes()));
}

MixedState conjugate_mixed(const UnitaryMatrix& u, const MixedState& rho) {
  if (u.n_photons() != rho.n_photons()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "unitary on N=" + std::to_string(u.n_photons()) +
                    " applied to state on N=" + std::to_string(rho.n_photons()));
  }
  ComplexMatrix out = u.entries() * rho.matrix() * u.entries().adjoint();
  // Hermitian part only; the anti-Hermitian residue is rounding.
  out = (0.5 * (out + out.adjoint())).eval();
  return MixedState(rho.n_photons(), std::move(out));
}

UnitaryMatrix::UnitaryMatrix(int n_photons, ComplexMatrix entries)
    : n_photons_(n_photons), entries_(std::move(entries)) {
  const Eigen::Index d = n_photons + 1;
  if (n_photons < 0 || entries_.rows() != d || entries_.cols() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "unitary must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  if (unitarity_error() >= kUnitarityTolerance) {
    throw Error(ErrorCode::kNotUnitary,
                "||U^dagger U - I||_max = " + std::to_string(unitarity_error()));
  }
}

UnitaryMatrix UnitaryMatrix::trusted(int n_photons, ComplexMatrix entries) {
  return UnitaryMatrix(TrustedTag{}, n_photons, std::move(entries));
}

UnitaryMatrix UnitaryMatrix::identity(int n_photons) {
  const int d = n_photons + 1;
  return trusted(n_photons, ComplexMatrix::Identity(d, d));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return trusted(n_photons_, entries_.adjoint());
}

double UnitaryMatrix::unitarity_error() const {
  const Eigen::Index d = entries_.rows();
  return (entries_.adjoint() * entries_ - ComplexMatrix::Identity(d, d))
      .cwiseAbs()
      .maxCoeff();
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.n_photons_ != b.n_photons_) {
    throw Error(ErrorCode::kDimensionMismatch, "product of unitaries on different N");
  }
  return UnitaryMatrix::trusted(a.n_photons_, a.entries_ * b.entries_);
}

}  // namespace su2pol
