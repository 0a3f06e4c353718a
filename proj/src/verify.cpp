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

#include "su2pol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "su2pol/bases.hpp"
#include "su2pol/orbits.hpp"
#include "su2pol/polarization.hpp"

namespace su2pol {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Collects the worst error over many comparisons against one tolerance.
class ErrorTracker {
 public:
  explicit ErrorTracker(double tolerance) : tolerance_(tolerance) {}

  void observe(double error) {
    if (!(error < tolerance_)) ok_ = false;
    if (std::isnan(error) || error > worst_) worst_ = error;
  }
  bool ok() const { return ok_; }
  double worst() const { return worst_; }
  double tolerance() const { return tolerance_; }

 private:
  double tolerance_;
  double worst_ = 0.0;
  bool ok_ = true;
};

CheckResult make_result(int id, std::string name, const ErrorTracker& t,
                        std::string detail = {}) {
  return {id, std::move(name), t.ok(), t.worst(), t.tolerance(), std::move(detail)};
}

double max_abs(const ComplexVector& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

PureState random_state(int n_photons, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n_photons + 1);
  for (int n = 0; n <= n_photons; ++n) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(n) = {re, im};
  }
  return make_state(n_photons, v, /*normalize=*/true);
}

EulerAngles random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> polar(0.0, kPi);
  EulerAngles a;
  a.beta = phase(rng);
  a.theta = polar(rng);
  a.alpha = phase(rng);
  return a;
}

double distance_up_to_phase(const ComplexVector& a, const ComplexVector& b) {
  const Complex ov = b.dot(a);  // <b|a>
  const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex(1.0);
  return max_abs(a - phase * b);
}

CheckResult check_reflection_identity(bool alternating_in_n) {
  ErrorTracker t(1e-12);
  ErrorTracker odd(1e-12);
  for (int n_photons = 0; n_photons <= 20; ++n_photons) {
    const UnitaryMatrix u = euler_unitary(n_photons, {0.0, kPi, 0.0});
    for (int n = 0; n <= n_photons; ++n) {
      const int power = alternating_in_n ? n : n_photons - n;
      const double sign = (power % 2 == 0) ? 1.0 : -1.0;
      const ComplexVector got = u.entries() * fock_state(n_photons, n).amplitudes();
      const ComplexVector want = sign * fock_state(n_photons, n_photons - n).amplitudes();
      t.observe(max_abs(got - want));
      if (n_photons % 2 == 1) odd.observe(max_abs(got - want));
    }
  }
  std::ostringstream detail;
  detail << "odd N worst=" << odd.worst();
  return make_result(1,
                     alternating_in_n
                         ? "reflection identity U(0,pi,0)|n,N-n> = (-1)^n|N-n,n>, N<=20"
                         : "reflection identity U(0,pi,0)|n,N-n> = (-1)^(N-n)|N-n,n>, N<=20",
                     t, detail.str());
}

CheckResult check_legendre_identity() {
  ErrorTracker t(1e-10);
  for (int n_photons = 2; n_photons <= 20; n_photons += 2) {
    const int mid = n_photons / 2;
    for (int j = 0; j < 100; ++j) {
      const double theta = kPi * j / 99.0;
      const double element = rotation_matrix(n_photons, theta)(mid, mid);
      t.observe(std::abs(element - legendre(mid, std::cos(theta))));
    }
  }
  return make_result(2, "Legendre identity <N/2,N/2|U(0,theta,0)|N/2,N/2> = P_{N/2}(cos theta)", t);
}

CheckResult check_odd_unit_degree() {
  ErrorTracker t(1e-10);
  std::mt19937_64 rng(kVerifySeed + 3);
  for (int n_photons : {1, 3, 5, 7}) {
    for (int i = 0; i < 50; ++i) {
      const PureState s = random_state(n_photons, rng);
      const double alpha = find_orthogonal_phase_odd(s);
      t.observe(std::abs(overlap(s, {0.0, kPi, alpha})));
    }
  }
  return make_result(3, "odd N unit degree via U(0,pi,alpha), 50 states per N in {1,3,5,7}", t);
}

CheckResult check_two_photon_unit_degree() {
  std::mt19937_64 rng(kVerifySeed + 4);
  ErrorTracker degree(1e-6);  // observes 1 - eta_q
  for (int i = 0; i < 50; ++i) {
    degree.observe(1.0 - degree_of_polarization(random_state(2, rng)).eta_q);
  }
  ErrorTracker closed(1e-12);
  ErrorTracker final_state(1e-10);
  for (int j = 0; j < 20; ++j) {
    const double vartheta = (kPi / 2) * j / 19.0;
    const PureState psi = psi_orbit_state(vartheta);
    ComplexVector want(3);
    want << std::cos(vartheta), 0.0, -std::sin(vartheta);
    for (double alpha : {kPi / 4, -kPi / 4, 3 * kPi / 4, -3 * kPi / 4}) {
      for (double shift : {kPi / 2, -kPi / 2}) {
        const EulerAngles a{alpha + shift, kPi, alpha};
        closed.observe(std::abs(overlap(psi, a)));
        const PureState moved = apply_unitary(euler_unitary(2, a), psi);
        final_state.observe(distance_up_to_phase(moved.amplitudes(), want));
      }
    }
  }
  std::ostringstream detail;
  detail << "max(1-eta_q)=" << degree.worst() << " (tol 1e-6); eight-solution overlap="
         << closed.worst() << " (tol 1e-12); final state=" << final_state.worst()
         << " (tol 1e-10)";
  ErrorTracker combined(1.0);
  combined.observe(degree.ok() && closed.ok() && final_state.ok() ? 0.0 : 1.0);
  CheckResult r = make_result(4, "N=2 unit degree and the eight closed-form solutions",
                              combined, detail.str());
  r.worst = std::max({degree.worst() / 1e-6, closed.worst() / 1e-12,
                      final_state.worst() / 1e-10});
  r.tolerance = 1.0;
  return r;
}

CheckResult check_middle_state() {
  ErrorTracker t(1e-10);
  for (int n_photons = 2; n_photons <= 12; n_photons += 2) {
    const PureState middle = fock_state(n_photons, n_photons / 2);
    for (double theta : middle_state_solutions(n_photons)) {
      t.observe(std::abs(overlap(middle, {0.0, theta, 0.0})));
    }
  }
  return make_result(5, "middle state |N/2,N/2> orthogonalized by Legendre zeros, N<=12", t);
}

CheckResult check_closed_form_overlap() {
  ErrorTracker t(1e-10);
  std::mt19937_64 rng(kVerifySeed + 6);
  std::uniform_real_distribution<double> orbit(0.0, kPi);
  for (int i = 0; i < 1000; ++i) {
    const double vartheta = orbit(rng);
    const EulerAngles a = random_angles(rng);
    t.observe(std::abs(two_photon_overlap_closed_form(vartheta, a) -
                       overlap(psi_orbit_state(vartheta), a)));
  }
  return make_result(6, "two-photon closed-form overlap vs matrix overlap, 1000 samples", t);
}

CheckResult check_transition_operator() {
  ErrorTracker t(1e-12);
  for (int j = 0; j < 20; ++j) {
    const double v = -kPi + 2 * kPi * j / 19.0;
    ComplexMatrix want(3, 3);
    want << std::cos(v), 0.0, std::sin(v), 0.0, 1.0, 0.0, -std::sin(v), 0.0, std::cos(v);
    t.observe((transition_unitary_two_photon(v).entries() - want).cwiseAbs().maxCoeff());
  }
  return make_result(7, "transition operator exp(v(J-^2 - J+^2)/2) is a real rotation", t);
}

CheckResult check_basis_fixtures() {
  ErrorTracker fixtures(1e-10);
  ErrorTracker gram(1e-10);
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);

  const OrthonormalBasis xi = two_photon_phase_basis();
  gram.observe(xi.gram_error());
  for (int k = 0; k < 3; ++k) {
    // xi_1, then U(0,0,+2pi/3) and U(0,0,-2pi/3) = U(0,0,4pi/3).
    const double sgn = k == 0 ? 0.0 : (k == 1 ? 1.0 : -1.0);
    ComplexVector want(3);
    if (k == 0) {
      want << 1.0, -1.0, -1.0;
    } else {
      want << std::polar(1.0, sgn * 2 * kPi / 3), -1.0, -std::polar(1.0, -sgn * 2 * kPi / 3);
    }
    fixtures.observe(max_abs(xi.states[k].amplitudes() - kI / r3 * want));
  }

  const OrthonormalBasis psi = two_photon_rotation_basis();
  gram.observe(psi.gram_error());
  {
    ComplexVector want(3);
    want << Complex(1.0, -r2), 0.0, Complex(1.0, r2);
    fixtures.observe(max_abs(psi.states[0].amplitudes() - want / r6));
    for (int k = 1; k < 3; ++k) {
      const double sgn = k == 1 ? 1.0 : -1.0;
      want << Complex(r2, 1.0), Complex(0.0, sgn * r6), Complex(r2, -1.0);
      fixtures.observe(max_abs(psi.states[k].amplitudes() - want / (2 * r3)));
    }
  }

  for (ThreePhotonSeed seed : {ThreePhotonSeed::kZeta1, ThreePhotonSeed::kZeta2}) {
    for (Sign sign : {Sign::kPlus, Sign::kMinus}) {
      fixtures.observe(max_abs(three_photon_equipartition(seed, sign, Axis::kZ).amplitudes() -
                               three_photon_equipartition_closed_form(seed, sign, Axis::kZ)));
    }
    fixtures.observe(
        max_abs(three_photon_equipartition(seed, Sign::kPlus, Axis::kY).amplitudes() -
                three_photon_equipartition_closed_form(seed, Sign::kPlus, Axis::kY)));
    for (Axis axis : {Axis::kZ, Axis::kY}) {
      gram.observe(three_photon_basis(seed, axis).gram_error());
    }
  }
  std::ostringstream detail;
  detail << "fixtures=" << fixtures.worst() << " gram=" << gram.worst();
  ErrorTracker combined(1e-10);
  combined.observe(std::max(fixtures.worst(), gram.worst()));
  return make_result(8, "basis fixtures xi, psi, three-photon equipartition; Gram = I",
                     combined, detail.str());
}

CheckResult check_psi_pi4_orbit() {
  ErrorTracker t(1e-10);
  const PureState psi = psi_orbit_state(kPi / 4);
  const ComplexVector want = kI * fock_state(2, 1).amplitudes();
  for (int j = 0; j < 10; ++j) {
    const double beta = 2 * kPi * j / 10.0;
    for (double s : {1.0, -1.0}) {
      const UnitaryMatrix u = euler_unitary(2, {beta, s * kPi / 2, -s * kPi / 2});
      t.observe(max_abs(u.entries() * psi.amplitudes() - want));
    }
  }
  return make_result(9, "U(beta,+-pi/2,-+pi/2) psi(pi/4) = i|1,1>", t);
}

CheckResult check_unpolarized_state() {
  bool ok = true;
  std::ostringstream detail;
  for (int n_photons = 0; n_photons <= 6; ++n_photons) {
    if (!is_unpolarized(maximally_mixed(n_photons))) {
      ok = false;
      detail << "maximally mixed N=" << n_photons << " rejected; ";
    }
  }
  std::mt19937_64 rng(kVerifySeed + 10);
  for (int n_photons : {1, 2, 3}) {
    if (is_unpolarized(projector(random_state(n_photons, rng)))) {
      ok = false;
      detail << "pure projector N=" << n_photons << " accepted; ";
    }
  }
  ErrorTracker t(0.5);
  t.observe(ok ? 0.0 : 1.0);
  return make_result(10, "maximally mixed states invariant, pure projectors not", t,
                     ok ? "" : detail.str());
}

CheckResult check_orbit_classification() {
  bool ok = true;
  std::ostringstream detail;
  const auto expect = [&](const PureState& s, OrbitKind kind, std::optional<int> label,
                          const std::string& what) {
    const OrbitClass c = classify_orbit(s);
    if (c.kind != kind || c.label != label) {
      ok = false;
      detail << what << " -> " << orbit_kind_name(c.kind)
             << (c.label ? "(" + std::to_string(*c.label) + ")" : "") << "; ";
    }
    return c;
  };
  for (int n_photons = 0; n_photons <= 6; ++n_photons) {
    for (int n = 0; n <= n_photons; ++n) {
      expect(fock_state(n_photons, n), OrbitKind::kType1, std::min(n, n_photons - n),
             "|" + std::to_string(n) + "," + std::to_string(n_photons - n) + ">");
    }
  }
  const PureState psi4 = psi_orbit_state(kPi / 4);
  const PureState psi8 = psi_orbit_state(kPi / 8);
  expect(psi4, OrbitKind::kType1, 1, "psi(pi/4)");
  const OrbitClass c8 = expect(psi8, OrbitKind::kType2, std::nullopt, "psi(pi/8)");
  double worst_witness = c8.witness_fidelity;

  std::mt19937_64 rng(kVerifySeed + 11);
  for (int i = 0; i < 10; ++i) {
    const UnitaryMatrix g = euler_unitary(2, random_angles(rng));
    expect(apply_unitary(g, psi4), OrbitKind::kType1, 1, "g psi(pi/4)");
    const OrbitClass c = expect(apply_unitary(g, psi8), OrbitKind::kType2, std::nullopt,
                                "g psi(pi/8)");
    worst_witness = std::max(worst_witness, c.witness_fidelity);
  }
  if (!(worst_witness < 1.0 - 1e-4)) {
    ok = false;
    detail << "psi(pi/8) witness fidelity " << worst_witness << " not below 1-1e-4; ";
  }
  ErrorTracker t(0.5);
  t.observe(ok ? 0.0 : 1.0);
  std::ostringstream d;
  d << "psi(pi/8) best witness fidelity " << worst_witness << "; " << detail.str();
  return make_result(11, "orbit classification of Fock states, psi(pi/4), psi(pi/8)", t,
                     d.str());
}

CheckResult check_odd_pairwise_formula() {
  ErrorTracker t(1e-10);
  ErrorTracker antiperiodic(1e-12);
  std::mt19937_64 rng(kVerifySeed + 12);
  std::uniform_real_distribution<double> phase(0.0, 4 * kPi);
  const int ns[] = {1, 3, 5, 7};
  for (int i = 0; i < 1000; ++i) {
    const int n_photons = ns[i % 4];
    const PureState s = random_state(n_photons, rng);
    const double alpha = phase(rng);
    t.observe(std::abs(odd_overlap_pi_rotation(s, alpha) -
                       kOddOverlapSign * overlap(s, {0.0, kPi, alpha})));
    antiperiodic.observe(
        std::abs(odd_overlap_pi_rotation(s, 0.0) + odd_overlap_pi_rotation(s, 2 * kPi)));
  }
  std::ostringstream detail;
  detail << "formula=" << t.worst() << " (tol 1e-10); f(0)+f(2pi)=" << antiperiodic.worst()
         << " (tol 1e-12)";
  CheckResult r = make_result(12, "odd N pairwise formula vs matrix overlap, 1000 samples", t,
                              detail.str());
  r.passed = t.ok() && antiperiodic.ok();
  return r;
}

std::vector<CheckResult> run_identity_suite() {
  return {check_reflection_identity(),   check_legendre_identity(),
          check_odd_unit_degree(),       check_two_photon_unit_degree(),
          check_middle_state(),          check_closed_form_overlap(),
          check_transition_operator(),   check_basis_fixtures(),
          check_psi_pi4_orbit(),         check_unpolarized_state(),
          check_orbit_classification(),  check_odd_pairwise_formula()};
}

std::string format_check(const CheckResult& r) {
  char head[64];
  std::snprintf(head, sizeof(head), "[%s] %02d ", r.passed ? "PASS" : "FAIL", r.id);
  char tail[96];
  std::snprintf(tail, sizeof(tail), "  worst=%.3e tol=%.1e", r.worst, r.tolerance);
  std::string line = head + r.name + tail;
  if (!r.detail.empty()) line += "  (" + r.detail + ")";
  return line;
}

}  // namespace su2pol
