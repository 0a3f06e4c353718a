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

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gtest/gtest.h"

#include "su2pol/errors.hpp"
#include "su2pol/orbits.hpp"
#include "su2pol/verify.hpp"

namespace su2pol {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Pade scaling-and-squaring exponential, independent of the spectral route.
ComplexMatrix oracle_exp(const ComplexMatrix& a) { return a.exp(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

TEST(AngularMomentum, JzIsDiagonalHalfIntegers) {
  const AngularMomentum one = angular_momentum_matrices(1);
  EXPECT_EQ(one.jz(0, 0), Complex(-0.5));
  EXPECT_EQ(one.jz(1, 1), Complex(0.5));
  const AngularMomentum two = angular_momentum_matrices(2);
  ComplexMatrix want = ComplexMatrix::Zero(3, 3);
  want.diagonal() << -1.0, 0.0, 1.0;
  EXPECT_EQ(two.jz, want);
}

TEST(AngularMomentum, JyElementsFromSchwingerForm) {
  // (a^dag b - a b^dag)/2i on |0,2>: a^dag b|0,2> = sqrt2 |1,1>.
  const AngularMomentum two = angular_momentum_matrices(2);
  EXPECT_NEAR(std::abs(two.jy(1, 0) - std::sqrt(2.0) / (2.0 * kI)), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(two.jy(0, 1) + std::sqrt(2.0) / (2.0 * kI)), 0.0, 1e-16);
  EXPECT_EQ(two.jy(2, 0), Complex(0.0));
  const ComplexVector out = two.jy * fock_state(2, 0).amplitudes();
  EXPECT_NEAR(std::abs(out(1) - std::sqrt(2.0) / (2.0 * kI)), 0.0, 1e-16);
}

TEST(AngularMomentum, CommutationRelationsUpToN20) {
  for (int n = 0; n <= 20; ++n) {
    const AngularMomentum j = angular_momentum_matrices(n);
    EXPECT_LT(max_abs(commutator(j.jx, j.jy) - kI * j.jz), 1e-12) << n;
    EXPECT_LT(max_abs(commutator(j.jy, j.jz) - kI * j.jx), 1e-12) << n;
    EXPECT_LT(max_abs(commutator(j.jz, j.jx) - kI * j.jy), 1e-12) << n;
    EXPECT_LT(max_abs(j.jx - j.jx.adjoint()), 1e-15);
    EXPECT_LT(max_abs(j.jy - j.jy.adjoint()), 1e-15);
  }
}

TEST(PhaseShift, FullTurn) {
  EXPECT_LT(max_abs(phase_shift_unitary(2, 2 * kPi).entries() - ComplexMatrix::Identity(3, 3)),
            1e-15);
  EXPECT_LT(max_abs(phase_shift_unitary(3, 2 * kPi).entries() + ComplexMatrix::Identity(4, 4)),
            1e-15);
}

TEST(PhaseShift, QuarterTurnOnPsiPi4) {
  const PureState psi = psi_orbit_state(kPi / 4);
  const PureState out = apply_unitary(phase_shift_unitary(2, kPi / 2), psi);
  // U(+pi/2, theta, 0) psi(pi/4) = +(i/sqrt2)(|0,2> - |2,0>) for any theta.
  ComplexVector want(3);
  want << kI, 0.0, -kI;
  want /= std::sqrt(2.0);
  EXPECT_LT((out.amplitudes() - want).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(fidelity(out, psi), 0.0, 1e-15);
}

TEST(Rotation, IdentityAtZeroIsExact) {
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(rotation_matrix(n, 0.0), RealMatrix::Identity(n + 1, n + 1));
  }
}

TEST(Rotation, HalfTurnOnTwoPhotons) {
  RealMatrix want(3, 3);
  want << 0, 0, 1, 0, -1, 0, 1, 0, 0;
  EXPECT_LT((rotation_matrix(2, kPi) - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Rotation, MiddleEntryOfTwoPhotonsIsCosTheta) {
  for (double theta : {0.1, 0.7, 1.3, 2.9}) {
    EXPECT_NEAR(rotation_matrix(2, theta)(1, 1), std::cos(theta), 1e-15);
  }
}

TEST(Rotation, MatchesIndependentMatrixExponential) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int n = 0; n <= 20; ++n) {
    const ComplexMatrix jy = angular_momentum_matrices(n).jy;
    for (int i = 0; i < 4; ++i) {
      const double theta = angle(rng);
      const ComplexMatrix want = oracle_exp(-kI * theta * jy);
      EXPECT_LT(max_abs(rotation_unitary(n, theta).entries() - want), 1e-12)
          << "N=" << n << " theta=" << theta;
    }
  }
}

TEST(Rotation, EntriesAreReal) {
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(rotation_unitary(n, 1.234).entries().imag().cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Rotation, CompositionLaw) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int n = 0; n <= 20; ++n) {
    const double a = angle(rng);
    const double b = angle(rng);
    EXPECT_LT((rotation_matrix(n, a) * rotation_matrix(n, b) - rotation_matrix(n, a + b))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12)
        << n;
  }
}

TEST(Euler, UnitaryUpToN20) {
  std::mt19937_64 rng(37);
  for (int n = 0; n <= 20; ++n) {
    for (int i = 0; i < 5; ++i) {
      EXPECT_LT(euler_unitary(n, random_angles(rng)).unitarity_error(), 1e-12) << n;
    }
    EXPECT_LT(transition_unitary_two_photon(0.3).unitarity_error(), 1e-12);
  }
}

TEST(Euler, IsOrderedProductOfFactors) {
  std::mt19937_64 rng(41);
  for (int n = 0; n <= 8; ++n) {
    const EulerAngles a = random_angles(rng);
    const UnitaryMatrix product = phase_shift_unitary(n, a.beta) *
                                  rotation_unitary(n, a.theta) *
                                  phase_shift_unitary(n, a.alpha);
    EXPECT_LT(max_abs(euler_unitary(n, a).entries() - product.entries()), 1e-14);
  }
}

TEST(Euler, IdentityAndPhaseComposition) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(euler_unitary(n, {}).entries(), ComplexMatrix::Identity(n + 1, n + 1));
    const UnitaryMatrix lhs = euler_unitary(n, {0.4, 0.0, 0.0}) * euler_unitary(n, {0.0, 0.0, 1.1});
    EXPECT_LT(max_abs(lhs.entries() - euler_unitary(n, {0.4, 0.0, 1.1}).entries()), 1e-12);
  }
}

TEST(Euler, PsiPi4ReachesMiddleFockState) {
  const PureState psi = psi_orbit_state(kPi / 4);
  const ComplexVector want = kI * fock_state(2, 1).amplitudes();
  for (double beta : {0.0, 0.3, 1.9, 4.0}) {
    for (double s : {1.0, -1.0}) {
      const PureState out = apply_unitary(euler_unitary(2, {beta, s * kPi / 2, -s * kPi / 2}), psi);
      EXPECT_LT((out.amplitudes() - want).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Euler, EquipartitionSeedForPhaseBasis) {
  const double theta_z = kPi / 2 - std::acos(1.0 / std::sqrt(3.0));
  const PureState out =
      apply_unitary(euler_unitary(2, {0.0, theta_z, kPi / 2}), psi_orbit_state(kPi / 4));
  ComplexVector want(3);
  want << 1.0, -1.0, -1.0;
  want *= kI / std::sqrt(3.0);
  EXPECT_LT((out.amplitudes() - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Euler, ReflectionIdentityInThisConvention) {
  // exp(-i pi Jy)|n,N-n> = (-1)^(N-n)|N-n,n>; equal to (-1)^n for even N.
  for (int n_photons = 0; n_photons <= 20; ++n_photons) {
    const UnitaryMatrix u = euler_unitary(n_photons, {0.0, kPi, 0.0});
    for (int n = 0; n <= n_photons; ++n) {
      const double sign = ((n_photons - n) % 2 == 0) ? 1.0 : -1.0;
      const ComplexVector got = u.entries() * fock_state(n_photons, n).amplitudes();
      EXPECT_LT((got - sign * fock_state(n_photons, n_photons - n).amplitudes())
                    .cwiseAbs()
                    .maxCoeff(),
                1e-12)
          << "N=" << n_photons << " n=" << n;
    }
  }
}

TEST(Euler, ReflectionSignForOddNDiffersFromAlternatingSign) {
  const ComplexVector got = euler_unitary(1, {0.0, kPi, 0.0}).entries() *
                            fock_state(1, 0).amplitudes();
  EXPECT_NEAR(got(1).real(), -1.0, 1e-15);
}

TEST(Euler, LegendreIdentityOnGrid) {
  for (int n_photons = 2; n_photons <= 20; n_photons += 2) {
    for (int j = 0; j < 100; ++j) {
      const double theta = kPi * j / 99.0;
      const Complex element =
          inner_product(fock_state(n_photons, n_photons / 2),
                        apply_unitary(rotation_unitary(n_photons, theta),
                                      fock_state(n_photons, n_photons / 2)));
      EXPECT_LT(std::abs(element - legendre(n_photons / 2, std::cos(theta))), 1e-10);
    }
  }
}

TEST(Euler, Periodicity) {
  for (int n = 0; n <= 9; ++n) {
    const UnitaryMatrix u = euler_unitary(n, {0.3, 1.2, 0.8});
    EXPECT_LT(max_abs(euler_unitary(n, {0.3, 1.2, 0.8 + 4 * kPi}).entries() - u.entries()),
              1e-12);
    const double sign = n % 2 == 1 ? -1.0 : 1.0;
    EXPECT_LT(max_abs(euler_unitary(n, {0.3, 1.2, 0.8 + 2 * kPi}).entries() -
                      sign * u.entries()),
              1e-12)
        << n;
  }
}

TEST(Transition, MatchesRealRotationForm) {
  for (double v : {0.0, 0.2, kPi / 4, 1.0, -2.5}) {
    ComplexMatrix want(3, 3);
    want << std::cos(v), 0.0, std::sin(v), 0.0, 1.0, 0.0, -std::sin(v), 0.0, std::cos(v);
    EXPECT_LT(max_abs(transition_unitary_two_photon(v).entries() - want), 1e-12);
  }
}

TEST(Transition, MatchesIndependentExponential) {
  const AngularMomentum j = angular_momentum_matrices(2);
  const ComplexMatrix jp = j.jx + kI * j.jy;
  const ComplexMatrix jm = j.jx - kI * j.jy;
  for (double v : {0.1, 0.9, 2.2}) {
    const ComplexMatrix want = oracle_exp(v * (jm * jm - jp * jp) / 2.0);
    EXPECT_LT(max_abs(transition_unitary_two_photon(v).entries() - want), 1e-12);
  }
}

TEST(Transition, GeneratesOrbitRepresentatives) {
  for (double v : {0.0, kPi / 8, kPi / 4, 0.6}) {
    const PureState out = apply_unitary(transition_unitary_two_photon(v), fock_state(2, 2));
    EXPECT_LT((out.amplitudes() - psi_orbit_state(v).amplitudes()).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Legendre, LowOrders) {
  for (double x : {-1.0, -0.4, 0.0, 0.3, 1.0}) {
    EXPECT_EQ(legendre(0, x), 1.0);
    EXPECT_EQ(legendre(1, x), x);
    EXPECT_NEAR(legendre(2, x), (3 * x * x - 1) / 2, 1e-15);
    EXPECT_NEAR(legendre(3, x), (5 * x * x * x - 3 * x) / 2, 1e-15);
  }
  EXPECT_THROW(legendre(-1, 0.0), Error);
  EXPECT_THROW(legendre(2, 1.5), Error);
}

TEST(Legendre, ZerosOfLowOrders) {
  EXPECT_EQ(legendre_zeros(1), std::vector<double>{0.0});
  const std::vector<double> two = legendre_zeros(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(two[0], -0.5773502691896258, 1e-15);
  EXPECT_NEAR(two[1], 0.5773502691896258, 1e-15);
  const std::vector<double> three = legendre_zeros(3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_NEAR(three[0], -std::sqrt(0.6), 1e-15);
  EXPECT_EQ(three[1], 0.0);
  EXPECT_NEAR(three[2], std::sqrt(0.6), 1e-15);
  EXPECT_THROW(legendre_zeros(0), Error);
}

TEST(Legendre, ZerosAreSortedInteriorRoots) {
  for (int m = 1; m <= 40; ++m) {
    const std::vector<double> zeros = legendre_zeros(m);
    ASSERT_EQ(static_cast<int>(zeros.size()), m);
    for (size_t i = 0; i < zeros.size(); ++i) {
      EXPECT_GT(zeros[i], -1.0);
      EXPECT_LT(zeros[i], 1.0);
      EXPECT_LT(std::abs(legendre(m, zeros[i])), 1e-12) << "m=" << m;
      if (i > 0) EXPECT_LT(zeros[i - 1], zeros[i]);
    }
  }
}

TEST(RotationCache, ConcurrentReadersSeeIdenticalResults) {
  std::vector<RealMatrix> sequential;
  for (int n = 0; n < 24; ++n) sequential.push_back(rotation_matrix(n, 0.77));
  std::vector<RealMatrix> parallel(24);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int n = t; n < 24; n += 4) parallel[n] = rotation_matrix(n, 0.77);
    });
  }
  for (auto& th : threads) th.join();
  for (int n = 0; n < 24; ++n) EXPECT_EQ(parallel[n], sequential[n]);
}

}  // namespace
}  // namespace su2pol
