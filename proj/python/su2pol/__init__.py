# Copyright 2026 The su2pol Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Degree of quantum polarization for two-mode N-photon states."""

from ._core import (
    PureState,
    Su2polError,
    basis,
    classify_orbit,
    degree_of_polarization,
    euler_unitary,
    fidelity,
    fock_state,
    inner_product,
    is_equipartition,
    legendre,
    legendre_zeros,
    make_state,
    orthogonalize,
    parse_state,
    psi_orbit_state,
    rotation_matrix,
    state_to_json,
    transform,
    verify,
)

__all__ = [
    "PureState",
    "Su2polError",
    "basis",
    "classify_orbit",
    "degree_of_polarization",
    "euler_unitary",
    "fidelity",
    "fock_state",
    "inner_product",
    "is_equipartition",
    "legendre",
    "legendre_zeros",
    "make_state",
    "orthogonalize",
    "parse_state",
    "psi_orbit_state",
    "rotation_matrix",
    "state_to_json",
    "transform",
    "verify",
]
