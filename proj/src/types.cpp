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

#include "dicke/types.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace dicke {

namespace {
// Dense states above this size would not fit comfortably in memory.
constexpr std::int64_t kMaxDenseDim = std::int64_t{1} << 28;
}  // namespace

std::int64_t pow_i64(int base, int exp) {
  if (exp < 0) throw std::domain_error("pow_i64: negative exponent");
  if (base < 0) throw std::domain_error("pow_i64: negative base");
  std::int64_t result = 1;
  for (int t = 0; t < exp; ++t) {
    if (base != 0 &&
        result > std::numeric_limits<std::int64_t>::max() / base) {
      throw std::domain_error("pow_i64: overflow");
    }
    result *= base;
  }
  return result;
}

DenseState::DenseState(int n_, int d_) : n(n_), d(d_) {
  if (n < 1) throw std::domain_error("DenseState: n must be positive");
  if (d < 2) throw std::domain_error("DenseState: d must be at least 2");
  const std::int64_t dim = pow_i64(d, n);
  if (dim > kMaxDenseDim) {
    throw std::domain_error("DenseState: dimension too large");
  }
  amplitudes.assign(static_cast<std::size_t>(dim), cplx{0.0, 0.0});
}

int digit_at(std::int64_t index, int site, int d) {
  return static_cast<int>((index / pow_i64(d, site - 1)) % d);
}

double l2_norm(const std::vector<cplx>& v) {
  long double sum = 0.0L;
  for (const cplx& a : v) {
    sum += static_cast<long double>(a.real()) * a.real() +
           static_cast<long double>(a.imag()) * a.imag();
  }
  return static_cast<double>(std::sqrt(sum));
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("max_abs_diff: length mismatch");
  }
  double worst = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    worst = std::max(worst, std::abs(a[t] - b[t]));
  }
  return worst;
}

bool is_normalized(const DenseState& state, double tol) {
  return std::abs(l2_norm(state.amplitudes) - 1.0) <= tol;
}

int occupation_sum(const OccupationVector& k) {
  int sum = 0;
  for (int v : k) sum += v;
  return sum;
}

}  // namespace dicke
