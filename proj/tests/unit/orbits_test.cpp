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

#include "su2pol/orbits.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "su2pol/polarization.hpp"
#include "su2pol/verify.hpp"

namespace su2pol {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(OrbitState, Representative) {
  const PureState s = psi_orbit_state(kPi / 6);
  EXPECT_NEAR(s[0].real(), 0.5, 1e-15);
  EXPECT_EQ(s[1], Complex(0.0));
  EXPECT_NEAR(s[2].real(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Classify, FockStatesLabelThemselves) {
  for (int n_photons = 1; n_photons <= 6; ++n_photons) {
    for (int n = 0; n <= n_photons; ++n) {
      const OrbitClass c = classify_orbit(fock_state(n_photons, n));
      ASSERT_EQ(c.kind, OrbitKind::kType1);
      EXPECT_EQ(*c.label, std::min(n, n_photons - n)) << n_photons << "," << n;
    }
  }
}

TEST(Classify, TwoPhotonOrbits) {
  const OrbitClass c = classify_orbit(psi_orbit_state(kPi / 4));
  EXPECT_EQ(c.kind, OrbitKind::kType1);
  EXPECT_EQ(c.label, 1);
  EXPECT_GT(c.witness_fidelity, kOrbitFidelityThreshold);

  const OrbitClass d = classify_orbit(psi_orbit_state(kPi / 8));
  EXPECT_EQ(orbit_kind_name(d.kind), "Type2");
  EXPECT_FALSE(d.label.has_value());
  EXPECT_LT(d.witness_fidelity, 0.9);
}

TEST(Classify, InvariantUnderSu2) {
  std::mt19937_64 rng(79);
  for (int n_photons = 1; n_photons <= 4; ++n_photons) {
    for (int n = 0; n <= n_photons; ++n) {
      const PureState moved =
          apply_unitary(euler_unitary(n_photons, random_angles(rng)), fock_state(n_photons, n));
      const OrbitClass c = classify_orbit(moved);
      ASSERT_EQ(c.kind, OrbitKind::kType1);
      EXPECT_EQ(*c.label, std::min(n, n_photons - n));
    }
  }
}

TEST(Classify, MiddleStateIsFullyPolarized) {
  for (int n : {2, 4}) {
    EXPECT_EQ(classify_orbit(fock_state(n, n / 2)).label, n / 2);
    EXPECT_GE(degree_of_polarization(fock_state(n, n / 2)).eta_q, 1.0 - 1e-6);
  }
}

}  // namespace
}  // namespace su2pol
