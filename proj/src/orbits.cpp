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

namespace su2pol {

std::string_view orbit_kind_name(OrbitKind kind) {
  return kind == OrbitKind::kType1 ? "Type1" : "Type2";
}

PureState psi_orbit_state(double vartheta) {
  return make_state(2, {std::sin(vartheta), 0.0, std::cos(vartheta)});
}

OrbitClass classify_orbit(const PureState& s, const OptimizerOptions& opts) {
  opts.validate();
  const int n_photons = s.n_photons();
  const ComplexVector& v = s.amplitudes();

  OrbitClass best;
  best.witness_fidelity = -1.0;
  for (int label = 0; label <= n_photons / 2; ++label) {
    const PureState target = fock_state(n_photons, label);
    const ComplexVector& t = target.amplitudes();
    const EulerObjective objective = [&](double beta, const RealMatrix& rotation,
                                         double alpha) {
      return 1.0 - std::norm(euler_matrix_element(t, beta, rotation, alpha, v));
    };
    const EulerSearchResult found = minimize_over_euler_angles(n_photons, objective, opts);
    const double f =
        fidelity(target, apply_unitary(euler_unitary(n_photons, found.angles), s));

    if (f > kOrbitFidelityThreshold) {
      OrbitClass out;
      out.kind = OrbitKind::kType1;
      out.label = label;
      out.witness_fidelity = f;
      out.witness_label = label;
      out.witness_angles = found.angles;
      return out;
    }
    if (f > best.witness_fidelity) {
      best.witness_fidelity = f;
      best.witness_label = label;
      best.witness_angles = found.angles;
    }
  }
  return best;
}

}  // namespace su2pol
