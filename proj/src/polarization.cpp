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

#include "su2pol/polarization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "su2pol/errors.hpp"

namespace su2pol {
namespace {

constexpr double kPi = std::numbers::pi;

PolarizationResult result_at(const PureState& s, const EulerAngles& angles) {
  PolarizationResult r;
  r.argmin = angles;
  r.transformed_state = apply_unitary(euler_unitary(s.n_photons(), angles), s);
  r.min_overlap_mag = std::min(std::abs(inner_product(s, r.transformed_state)), 1.0);
  r.eta_q = std::sqrt(1.0 - r.min_overlap_mag * r.min_overlap_mag);
  return r;
}

void require_odd(const PureState& s) {
  if (s.n_photons() % 2 == 0) {
    throw Error(ErrorCode::kEvenN, "operation requires an odd photon number, got N=" +
                                       std::to_string(s.n_photons()));
  }
}

// Imaginary part of the pairwise sum; the real part vanishes identically.
double odd_overlap_imag(const PureState& s, double alpha) {
  const int n_photons = s.n_photons();
  double sum = 0.0;
  for (int k = 0; k <= (n_photons - 1) / 2; ++k) {
    const Complex lo = s[k];
    const Complex hi = s[n_photons - k];
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::abs(lo) * std::abs(hi) *
           std::sin(std::arg(lo) - std::arg(hi) + (n_photons - 2 * k) * alpha / 2.0);
  }
  return -2.0 * sum;
}

}  // namespace

Complex overlap(const PureState& s, const EulerAngles& angles) {
  return s.amplitudes().dot(euler_unitary(s.n_photons(), angles).entries() *
                            s.amplitudes());
}

Complex two_photon_overlap_closed_form(double vartheta, const EulerAngles& a) {
  const double half_cos = std::cos(a.theta / 2.0);
  const double half_sin = std::sin(a.theta / 2.0);
  const Complex bracket(std::cos(a.alpha + a.beta),
                        -std::sin(a.alpha + a.beta) * std::cos(2.0 * vartheta));
  return std::cos(a.alpha - a.beta) * std::sin(2.0 * vartheta) * half_sin * half_sin +
         bracket * half_cos * half_cos;
}

PolarizationResult degree_of_polarization(const PureState& s,
                                          const OptimizerOptions& opts) {
  opts.validate();
  if (s.n_photons() == 0) return result_at(s, EulerAngles{});
  const ComplexVector& v = s.amplitudes();
  const EulerObjective objective = [&v](double beta, const RealMatrix& rotation,
                                        double alpha) {
    return std::norm(euler_matrix_element(v, beta, rotation, alpha, v));
  };
  const EulerSearchResult best =
      minimize_over_euler_angles(s.n_photons(), objective, opts);
  return result_at(s, best.angles);
}

std::string_view route_name(OrthogonalizeRoute route) {
  switch (route) {
    case OrthogonalizeRoute::kOddPhase:
      return "odd_phase";
    case OrthogonalizeRoute::kMiddleState:
      return "middle_state";
    case OrthogonalizeRoute::kTwoPhotonClosedForm:
      return "two_photon_closed_form";
    case OrthogonalizeRoute::kNumerical:
      return "numerical";
  }
  return "unknown";
}

OrthogonalizeOutcome orthogonalize(const PureState& s, const OptimizerOptions& opts) {
  const int n_photons = s.n_photons();
  const auto accept = [](OrthogonalizeRoute route, PolarizationResult r) {
    OrthogonalizeOutcome out;
    out.route = route;
    out.found = r.min_overlap_mag < kOrthogonalityThreshold;
    out.result = std::move(r);
    return out;
  };

  if (n_photons % 2 == 1) {
    OrthogonalizeOutcome out = accept(
        OrthogonalizeRoute::kOddPhase,
        result_at(s, EulerAngles{0.0, kPi, find_orthogonal_phase_odd(s)}));
    if (out.found) return out;
  } else if (n_photons >= 2 && equal_up_to_phase(s, fock_state(n_photons, n_photons / 2))) {
    OrthogonalizeOutcome out =
        accept(OrthogonalizeRoute::kMiddleState,
               result_at(s, EulerAngles{0.0, middle_state_solutions(n_photons).front(), 0.0}));
    if (out.found) return out;
  } else if (n_photons == 2) {
    // theta = pi, beta = alpha +- pi/2, alpha in {+-pi/4, +-3pi/4}; exact on
    // the orbit representatives psi(vartheta).
    for (double alpha : {kPi / 4, -kPi / 4, 3 * kPi / 4, -3 * kPi / 4}) {
      for (double shift : {kPi / 2, -kPi / 2}) {
        OrthogonalizeOutcome out =
            accept(OrthogonalizeRoute::kTwoPhotonClosedForm,
                   result_at(s, EulerAngles{alpha + shift, kPi, alpha}));
        if (out.found) return out;
      }
    }
  }
  return accept(OrthogonalizeRoute::kNumerical, degree_of_polarization(s, opts));
}

Complex odd_overlap_pi_rotation(const PureState& s, double alpha) {
  require_odd(s);
  return {0.0, odd_overlap_imag(s, alpha)};
}

double find_orthogonal_phase_odd(const PureState& s) {
  require_odd(s);
  constexpr int kSamples = 32;
  constexpr double kIdenticallyZero = 1e-14;
  constexpr double kTwoPi = 2.0 * kPi;

  std::array<double, kSamples + 1> alphas{};
  std::array<double, kSamples + 1> values{};
  bool all_zero = true;
  for (int j = 0; j <= kSamples; ++j) {
    alphas[j] = kTwoPi * j / kSamples;
    values[j] = odd_overlap_imag(s, alphas[j]);
    if (std::abs(values[j]) >= kIdenticallyZero) all_zero = false;
  }
  if (all_zero) return 0.0;

  // f(2pi) = -f(0), so some consecutive pair brackets a root.
  for (int j = 0; j < kSamples; ++j) {
    if (values[j] == 0.0) return alphas[j];
    if ((values[j] < 0.0) == (values[j + 1] < 0.0) && values[j + 1] != 0.0) continue;
    double lo = alphas[j];
    double hi = alphas[j + 1];
    double f_lo = values[j];
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double f_mid = odd_overlap_imag(s, mid);
      if (f_mid == 0.0) return mid;
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return std::abs(f_lo) <= std::abs(odd_overlap_imag(s, hi)) ? lo : hi;
  }
  return kTwoPi;
}

std::vector<double> middle_state_solutions(int n_photons) {
  if (n_photons % 2 != 0) {
    throw Error(ErrorCode::kOddN, "middle state needs even N, got N=" +
                                      std::to_string(n_photons));
  }
  if (n_photons < 2) {
    throw Error(ErrorCode::kInvalidArgument, "middle state solutions need N >= 2");
  }
  std::vector<double> thetas;
  for (double x : legendre_zeros(n_photons / 2)) thetas.push_back(std::acos(x));
  std::sort(thetas.begin(), thetas.end());
  return thetas;
}

bool is_unpolarized(const MixedState& rho, double tol, int samples) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> polar(0.0, kPi);
  for (int i = 0; i < samples; ++i) {
    const double beta = phase(rng);
    const double theta = polar(rng);
    const double alpha = phase(rng);
    const UnitaryMatrix u =
        euler_unitary(rho.n_photons(), EulerAngles{beta, theta, alpha});
    const ComplexMatrix diff =
        u.entries() * rho.matrix() * u.entries().adjoint() - rho.matrix();
    if (diff.cwiseAbs().maxCoeff() >= tol) return false;
  }
  return true;
}

}  // namespace su2pol
