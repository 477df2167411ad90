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

#include <complex>
#include <cstdint>
#include <vector>

namespace dicke {

using cplx = std::complex<double>;

// Absolute tolerance for amplitude-level comparisons.
inline constexpr double kAmplitudeTol = 1e-12;

// Singular values at or below this threshold do not count towards the rank.
inline constexpr double kRankTol = 1e-10;

// Vectors shorter than this are processed by a single thread; the fork/join
// overhead dominates below it.
inline constexpr std::int64_t kParallelCutoff = 1 << 12;

// Occupation numbers (k_0, ..., k_{d-1}). Also used for the partial
// occupation vectors that label bond sectors.
using OccupationVector = std::vector<int>;

// base^exp for small non-negative exponents. Throws std::domain_error on
// overflow or negative exponent.
std::int64_t pow_i64(int base, int exp);

// Amplitudes over the computational basis of n d-level sites. Site 1 is the
// least significant base-d digit of the flat index, site n the most
// significant.
struct DenseState {
  int n = 0;
  int d = 2;
  std::vector<cplx> amplitudes;

  DenseState() = default;
  DenseState(int n_, int d_);

  std::int64_t dim() const {
    return static_cast<std::int64_t>(amplitudes.size());
  }
};

// Base-d digit of `index` at 1-based position `site`.
int digit_at(std::int64_t index, int site, int d);

// Euclidean norm, accumulated in extended precision.
double l2_norm(const std::vector<cplx>& v);

// max_i |a_i - b_i|. Throws std::invalid_argument on length mismatch.
double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b);

bool is_normalized(const DenseState& state, double tol = kAmplitudeTol);

int occupation_sum(const OccupationVector& k);

}  // namespace dicke
