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

#include "su2pol/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "su2pol/errors.hpp"
#include "su2pol/orbits.hpp"

namespace su2pol {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFixtureTolerance = 1e-10;
const Complex kI(0.0, 1.0);

void require_exact(const PureState& got, const ComplexVector& expected,
                   const char* what) {
  if ((got.amplitudes() - expected).cwiseAbs().maxCoeff() > kFixtureTolerance) {
    throw std::logic_error(std::string("convention regression: ") + what +
                           " does not match its closed form");
  }
}

UnitaryMatrix generator_power(int n_photons, Axis axis, double angle) {
  return axis == Axis::kZ ? phase_shift_unitary(n_photons, angle)
                          : rotation_unitary(n_photons, angle);
}

}  // namespace

std::string_view axis_name(Axis axis) { return axis == Axis::kZ ? "z" : "y"; }

Axis parse_axis(std::string_view name) {
  if (name == "z") return Axis::kZ;
  if (name == "y") return Axis::kY;
  throw Error(ErrorCode::kInvalidArgument, "axis must be 'z' or 'y', got '" +
                                               std::string(name) + "'");
}

ComplexMatrix OrthonormalBasis::gram() const {
  const int d = static_cast<int>(states.size());
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = inner_product(states[i], states[j]);
  }
  return g;
}

double OrthonormalBasis::gram_error() const {
  const ComplexMatrix g = gram();
  return (g - ComplexMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

ComplexMatrix generator_eigenbasis(int n_photons, Axis axis) {
  const int d = n_photons + 1;
  if (axis == Axis::kZ) return ComplexMatrix::Identity(d, d);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(angular_momentum_matrices(n_photons).jy);
  ComplexMatrix vectors = eig.eigenvectors();
  for (int k = 0; k < d; ++k) {
    for (int n = 0; n < d; ++n) {
      if (std::abs(vectors(n, k)) > 1e-12) {
        vectors.col(k) *= std::conj(vectors(n, k)) / std::abs(vectors(n, k));
        vectors(n, k) = std::abs(vectors(n, k));
        break;
      }
    }
  }
  return vectors;
}

ComplexVector generator_components(const PureState& s, Axis axis) {
  return generator_eigenbasis(s.n_photons(), axis).adjoint() * s.amplitudes();
}

bool is_equipartition(const PureState& s, Axis axis, double tol) {
  const double target = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  const ComplexVector c = generator_components(s, axis);
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    if (std::abs(std::abs(c(k)) - target) > tol) return false;
  }
  return true;
}

OrthonormalBasis cyclic_basis(const PureState& s, Axis axis,
                              std::string seed_description) {
  if (!is_equipartition(s, axis)) {
    throw Error(ErrorCode::kNotEquipartition,
                "seed is not an equipartition state of J" +
                    std::string(axis_name(axis)));
  }
  OrthonormalBasis basis;
  basis.n_photons = s.n_photons();
  basis.generator_axis = axis;
  basis.seed_description = std::move(seed_description);
  basis.step = 2.0 * kPi / s.dimension();
  basis.states.push_back(s);
  for (int k = 1; k < s.dimension(); ++k) {
    basis.states.push_back(
        apply_unitary(generator_power(s.n_photons(), axis, k * basis.step), s));
  }
  return basis;
}

double two_photon_phase_seed_angle() { return kPi / 2 - std::acos(1.0 / std::sqrt(3.0)); }

double two_photon_rotation_seed_phase() { return std::atan(1.0 / std::sqrt(2.0)) - kPi / 2; }

OrthonormalBasis two_photon_phase_basis() {
  const PureState xi1 =
      apply_unitary(euler_unitary(2, {0.0, two_photon_phase_seed_angle(), kPi / 2}),
                    psi_orbit_state(kPi / 4));
  ComplexVector expected(3);
  expected << 1.0, -1.0, -1.0;
  require_exact(xi1, expected * kI / std::sqrt(3.0), "xi_1");
  return cyclic_basis(xi1, Axis::kZ, "psi(pi/4)");
}

OrthonormalBasis two_photon_rotation_basis() {
  const PureState psi1 = apply_unitary(
      phase_shift_unitary(2, two_photon_rotation_seed_phase()), psi_orbit_state(kPi / 4));
  const double r2 = std::sqrt(2.0);
  ComplexVector expected(3);
  expected << Complex(1.0, -r2), 0.0, Complex(1.0, r2);
  require_exact(psi1, expected / std::sqrt(6.0), "psi_1");
  return cyclic_basis(psi1, Axis::kY, "psi(pi/4)");
}

std::string_view seed_name(ThreePhotonSeed seed) {
  return seed == ThreePhotonSeed::kZeta1 ? "zeta1" : "zeta2";
}

ThreePhotonSeed parse_seed(std::string_view name) {
  if (name == "zeta1") return ThreePhotonSeed::kZeta1;
  if (name == "zeta2") return ThreePhotonSeed::kZeta2;
  throw Error(ErrorCode::kInvalidArgument, "seed must be 'zeta1' or 'zeta2', got '" +
                                               std::string(name) + "'");
}

PureState three_photon_seed(ThreePhotonSeed seed) {
  const double h = 1.0 / std::sqrt(2.0);
  return seed == ThreePhotonSeed::kZeta1 ? make_state(3, {h, 0.0, 0.0, h})
                                         : make_state(3, {0.0, h, h, 0.0});
}

double three_photon_rotation_angle(Sign sign) {
  return std::acos((sign == Sign::kPlus ? 1.0 : -1.0) / std::sqrt(3.0));
}

double three_photon_circular_phase() { return std::acos(-std::sqrt(2.0 / 3.0)); }

PureState three_photon_equipartition(ThreePhotonSeed seed, Sign sign, Axis axis) {
  const EulerAngles angles =
      axis == Axis::kZ ? EulerAngles{0.0, three_photon_rotation_angle(sign), kPi / 2}
                       : EulerAngles{three_photon_circular_phase(), kPi / 2, 0.0};
  return apply_unitary(euler_unitary(3, angles), three_photon_seed(seed));
}

ComplexVector three_photon_equipartition_closed_form(ThreePhotonSeed seed, Sign sign,
                                                     Axis axis) {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double c = std::acos(1.0 / 3.0);
  ComplexVector v(4);
  if (axis == Axis::kY) {
    const Complex prefactor = -kI * std::polar(1.0, -0.75 * c) / 2.0;
    const Complex tail = Complex(1.0, 2.0 * r2);
    if (seed == ThreePhotonSeed::kZeta1) {
      v << 1.0, 0.0, tail / r3, 0.0;
    } else {
      v << r3, 0.0, -tail / 3.0, 0.0;
    }
    return prefactor * v;
  }
  const double s = sign == Sign::kPlus ? 1.0 : -1.0;
  if (seed == ThreePhotonSeed::kZeta1) {
    const Complex prefactor = s * kI * std::polar(1.0, s * 0.75 * c) / 2.0;
    v << 1.0, Complex(-s * r2, 1.0) / r3, Complex(1.0, s * r2) / r3, kI;
    return prefactor * v;
  }
  const Complex prefactor = std::polar(1.0, s * 0.25 * c) / 2.0;
  v << 1.0, Complex(s * r2, -1.0) / r3, Complex(-1.0, -s * r2) / r3, kI;
  return prefactor * v;
}

OrthonormalBasis three_photon_basis(ThreePhotonSeed seed, Axis axis) {
  return cyclic_basis(three_photon_equipartition(seed, Sign::kPlus, axis), axis,
                      std::string(seed_name(seed)));
}

}  // namespace su2pol
