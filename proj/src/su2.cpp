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

#include "su2pol/su2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "su2pol/errors.hpp"

namespace su2pol {
namespace {

void require_nonnegative(int n_photons) {
  if (n_photons < 0) {
    throw Error(ErrorCode::kInvalidArgument, "photon number must be >= 0");
  }
}

// sqrt((n+1)(N-n)): matrix element of a^dag b from |n,N-n> to |n+1,N-n-1>.
double raising_element(int n_photons, int n) {
  return std::sqrt(static_cast<double>(n + 1) * (n_photons - n));
}

// Jx is real symmetric tridiagonal with spectrum {-N/2, ..., N/2}, and
// Jy = V Jx V^dag with V = diag((-i)^n). Rotations are therefore assembled
// from the real eigenvectors of Jx.
struct RotationBasis {
  RealMatrix eigenvectors;
  Eigen::VectorXd eigenvalues;
};

RotationBasis compute_rotation_basis(int n_photons) {
  const int d = n_photons + 1;
  RotationBasis basis;
  if (d == 1) {
    basis.eigenvectors = RealMatrix::Identity(1, 1);
    basis.eigenvalues = Eigen::VectorXd::Zero(1);
    return basis;
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd sub(d - 1);
  for (int n = 0; n < n_photons; ++n) sub(n) = 0.5 * raising_element(n_photons, n);
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  basis.eigenvectors = eig.eigenvectors();
  // The spectrum is known exactly; ascending order matches the solver's.
  basis.eigenvalues.resize(d);
  for (int k = 0; k < d; ++k) basis.eigenvalues(k) = k - 0.5 * n_photons;
  return basis;
}

const RotationBasis& rotation_basis(int n_photons) {
  static std::mutex mutex;
  static std::map<int, RotationBasis> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n_photons);
  if (it == cache.end()) {
    it = cache.emplace(n_photons, compute_rotation_basis(n_photons)).first;
  }
  return it->second;
}

}  // namespace

AngularMomentum angular_momentum_matrices(int n_photons) {
  require_nonnegative(n_photons);
  const int d = n_photons + 1;
  ComplexMatrix raise = ComplexMatrix::Zero(d, d);  // a^dag b
  for (int n = 0; n < n_photons; ++n) raise(n + 1, n) = raising_element(n_photons, n);
  const ComplexMatrix lower = raise.adjoint();  // a b^dag
  const Complex two_i(0.0, 2.0);

  AngularMomentum j;
  j.jx = (raise + lower) / 2.0;
  j.jy = (raise - lower) / two_i;
  j.jz = ComplexMatrix::Zero(d, d);
  for (int n = 0; n < d; ++n) j.jz(n, n) = jz_eigenvalue(n_photons, n);
  return j;
}

UnitaryMatrix phase_shift_unitary(int n_photons, double alpha) {
  require_nonnegative(n_photons);
  const int d = n_photons + 1;
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    u(n, n) = std::polar(1.0, -alpha * jz_eigenvalue(n_photons, n));
  }
  return UnitaryMatrix::trusted(n_photons, std::move(u));
}

RealMatrix rotation_matrix(int n_photons, double theta) {
  require_nonnegative(n_photons);
  const int d = n_photons + 1;
  if (theta == 0.0) return RealMatrix::Identity(d, d);

  const RotationBasis& basis = rotation_basis(n_photons);
  const RealMatrix& q = basis.eigenvectors;
  Eigen::VectorXd cos_part(d);
  Eigen::VectorXd sin_part(d);
  for (int k = 0; k < d; ++k) {
    const double phase = theta * basis.eigenvalues(k);
    cos_part(k) = std::cos(phase);
    sin_part(k) = std::sin(phase);
  }
  // exp(-i theta Jx) = C - i S with C, S real symmetric.
  const RealMatrix c = q * cos_part.asDiagonal() * q.transpose();
  const RealMatrix s = q * sin_part.asDiagonal() * q.transpose();

  // Conjugating by V multiplies entry (m, n) by (-i)^(m - n); C carries the
  // even offsets and S the odd ones.
  RealMatrix out(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      switch (((m - n) % 4 + 4) % 4) {
        case 0: out(m, n) = c(m, n); break;
        case 1: out(m, n) = -s(m, n); break;
        case 2: out(m, n) = -c(m, n); break;
        default: out(m, n) = s(m, n); break;
      }
    }
  }
  return out;
}

UnitaryMatrix rotation_unitary(int n_photons, double theta) {
  return UnitaryMatrix::trusted(
      n_photons, rotation_matrix(n_photons, theta).cast<Complex>());
}

UnitaryMatrix euler_unitary(int n_photons, const EulerAngles& angles) {
  require_nonnegative(n_photons);
  const int d = n_photons + 1;
  ComplexMatrix u = rotation_matrix(n_photons, angles.theta).cast<Complex>();
  for (int m = 0; m < d; ++m) {
    const Complex left = std::polar(1.0, -angles.beta * jz_eigenvalue(n_photons, m));
    for (int n = 0; n < d; ++n) {
      u(m, n) *= left * std::polar(1.0, -angles.alpha * jz_eigenvalue(n_photons, n));
    }
  }
  return UnitaryMatrix::trusted(n_photons, std::move(u));
}

ComplexMatrix expm_anti_hermitian(const ComplexMatrix& a) {
  const ComplexMatrix h = Complex(0.0, 1.0) * a;  // Hermitian, a = -i h
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h + h.adjoint()));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  ComplexVector phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) phases(k) = std::polar(1.0, -lambda(k));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

UnitaryMatrix transition_unitary_two_photon(double vartheta) {
  const AngularMomentum j = angular_momentum_matrices(2);
  const Complex i(0.0, 1.0);
  const ComplexMatrix j_plus = j.jx + i * j.jy;
  const ComplexMatrix j_minus = j.jx - i * j.jy;
  const ComplexMatrix generator =
      vartheta * (j_minus * j_minus - j_plus * j_plus) / 2.0;
  return UnitaryMatrix::trusted(2, expm_anti_hermitian(generator));
}

double legendre(int m, double x) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "Legendre order must be >= 0");
  if (!(std::abs(x) <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "Legendre argument must lie in [-1, 1]");
  }
  if (m == 0) return 1.0;
  double previous = 1.0;
  double current = x;
  for (int k = 1; k < m; ++k) {
    const double next = ((2 * k + 1) * x * current - k * previous) / (k + 1);
    previous = current;
    current = next;
  }
  return current;
}

namespace {

// P_m(x) and P_m'(x) for |x| < 1.
std::pair<double, double> legendre_with_derivative(int m, double x) {
  const double p = legendre(m, x);
  const double p_prev = legendre(m - 1, x);
  return {p, m * (x * p - p_prev) / (x * x - 1.0)};
}

}  // namespace

std::vector<double> legendre_zeros(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "Legendre zeros need order >= 1");
  constexpr double kTolerance = 1e-14;
  constexpr int kMaxIterations = 100;

  // Roots are symmetric about 0: solve for the positive half and mirror.
  std::vector<double> positive;
  for (int i = 0; i < m / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    for (int it = 0; it < kMaxIterations; ++it) {
      const auto [p, dp] = legendre_with_derivative(m, x);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < kTolerance) break;
    }
    positive.push_back(x);
  }
  std::vector<double> zeros;
  zeros.reserve(m);
  for (double x : positive) zeros.push_back(-x);
  if (m % 2 == 1) zeros.push_back(0.0);
  for (double x : positive) zeros.push_back(x);
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

}  // namespace su2pol
