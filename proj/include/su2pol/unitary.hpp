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

#pragma once

#include "su2pol/manifold.hpp"

namespace su2pol {

inline constexpr double kUnitarityTolerance = 1e-12;

/// (N+1)x(N+1) unitary acting on H_N.
class UnitaryMatrix {
 public:
  /// Checks ||U^dagger U - I||_max < kUnitarityTolerance; throws NotUnitary
  /// or DimensionMismatch.
  UnitaryMatrix(int n_photons, ComplexMatrix entries);

  /// For builders whose output is unitary by construction.
  static UnitaryMatrix trusted(int n_photons, ComplexMatrix entries);

  static UnitaryMatrix identity(int n_photons);

  int n_photons() const noexcept { return n_photons_; }
  int dimension() const noexcept { return n_photons_ + 1; }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  UnitaryMatrix adjoint() const;

  /// Largest entry of |U^dagger U - I|.
  double unitarity_error() const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  struct TrustedTag {};
  UnitaryMatrix(TrustedTag, int n_photons, ComplexMatrix entries)
      : n_photons_(n_photons), entries_(std::move(entries)) {}

  int n_photons_;
  ComplexMatrix entries_;
};

}  // namespace su2pol
