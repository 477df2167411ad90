// Copyright 2026 The dicke-mps Authors
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

#include "dicke/types.hpp"

namespace dicke::schmidt {

// Singular values of the bipartition after site `cut`, descending. `rank`
// counts the values above the tolerance.
struct SchmidtSpectrum {
  int cut = 0;
  std::vector<double> values;
  int rank = 0;
};

// Full SVD of the d^cut x d^(n-cut) amplitude matrix. Independent of any
// closed-form coefficients; serves as the rank oracle.
SchmidtSpectrum schmidt_spectrum(const DenseState& state, int cut,
                                 double tol = kRankTol);

// Rebuild the state from its Schmidt decomposition across `cut`: a sum of
// coefficient-weighted products of smaller Dicke states. Used to check the
// closed-form coefficients against the direct constructions.
DenseState reconstruct_qubit(int n, int k, int cut);
DenseState reconstruct_spin(int n, int k, int two_s, int cut);
DenseState reconstruct_qudit(int n, const OccupationVector& kvec, int cut);

}  // namespace dicke::schmidt
