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

#include "dicke/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dicke {

BigInt binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int t = 0; t < k; ++t) {
    result *= n - t;
    result /= t + 1;  // divides exactly: result is C(n, t+1) here
  }
  return result;
}

BigInt multinomial(int n, const OccupationVector& parts) {
  if (n < 0) throw std::domain_error("multinomial: n must be non-negative");
  for (int p : parts) {
    if (p < 0) return 0;
  }
  if (occupation_sum(parts) != n) {
    throw std::domain_error("multinomial: parts must sum to n");
  }
  BigInt result = 1;
  int used = 0;
  for (int p : parts) {
    used += p;
    result *= binomial(used, p);
  }
  return result;
}

double sqrt_ratio(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::domain_error("sqrt_ratio: denominator not positive");
  if (num < 0) throw std::domain_error("sqrt_ratio: negative numerator");
  if (num == 0) return 0.0;
  return std::sqrt(num.convert_to<double>() / den.convert_to<double>());
}

double hypergeom_coeff(int n, int k, int i, int j) {
  if (n < 0 || k < 0 || k > n || i < 0 || i > n) {
    throw std::domain_error("hypergeom_coeff: need 0 <= k <= n, 0 <= i <= n");
  }
  return sqrt_ratio(binomial(i, j) * binomial(n - i, k - j), binomial(n, k));
}

double spin_hypergeom_coeff(int n, int k, int two_s, int i, int j) {
  if (two_s < 1) throw std::domain_error("spin_hypergeom_coeff: need 2s >= 1");
  if (n < 0 || k < 0 || k > two_s * n || i < 0 || i > n) {
    throw std::domain_error(
        "spin_hypergeom_coeff: need 0 <= k <= 2s*n, 0 <= i <= n");
  }
  return sqrt_ratio(
      binomial(two_s * i, j) * binomial(two_s * (n - i), k - j),
      binomial(two_s * n, k));
}

namespace {

void validate_occupations(const char* who, int n, const OccupationVector& kvec) {
  if (kvec.size() < 2) {
    throw std::domain_error(std::string(who) + ": need at least two levels");
  }
  for (int v : kvec) {
    if (v < 0) throw std::domain_error(std::string(who) + ": negative count");
  }
  if (occupation_sum(kvec) != n) {
    throw std::domain_error(std::string(who) + ": counts must sum to n");
  }
}

OccupationVector subtract(const OccupationVector& a, const OccupationVector& b) {
  OccupationVector out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = a[t] - b[t];
  return out;
}

}  // namespace

double qudit_schmidt_coeff(int n, const OccupationVector& kvec, int l,
                           const OccupationVector& avec) {
  validate_occupations("qudit_schmidt_coeff", n, kvec);
  if (l < 0 || l > n) {
    throw std::domain_error("qudit_schmidt_coeff: need 0 <= l <= n");
  }
  if (avec.size() != kvec.size()) {
    throw std::domain_error("qudit_schmidt_coeff: level-count mismatch");
  }
  if (occupation_sum(avec) != l) {
    throw std::domain_error("qudit_schmidt_coeff: avec must sum to l");
  }
  for (std::size_t t = 0; t < avec.size(); ++t) {
    if (avec[t] < 0 || avec[t] > kvec[t]) return 0.0;
  }
  return sqrt_ratio(
      multinomial(l, avec) * multinomial(n - l, subtract(kvec, avec)),
      multinomial(n, kvec));
}

std::vector<SchmidtCoefficient> qubit_schmidt_coefficients(int n, int k,
                                                           int cut) {
  if (cut < 1 || cut > n - 1) {
    throw std::domain_error("qubit_schmidt_coefficients: need 1 <= cut < n");
  }
  const int jmin = std::max(0, k - (n - cut));
  const int jmax = std::min(k, cut);
  std::vector<SchmidtCoefficient> out;
  for (int j = jmin; j <= jmax; ++j) {
    out.push_back({hypergeom_coeff(n, k, cut, j), k - j, j});
  }
  return out;
}

std::vector<SchmidtCoefficient> spin_schmidt_coefficients(int n, int k,
                                                          int two_s, int cut) {
  if (cut < 1 || cut > n - 1) {
    throw std::domain_error("spin_schmidt_coefficients: need 1 <= cut < n");
  }
  const int jmin = std::max(0, k - two_s * (n - cut));
  const int jmax = std::min(k, two_s * cut);
  std::vector<SchmidtCoefficient> out;
  for (int j = jmin; j <= jmax; ++j) {
    out.push_back({spin_hypergeom_coeff(n, k, two_s, cut, j), k - j, j});
  }
  return out;
}

std::vector<SchmidtCoefficient> qudit_schmidt_coefficients(
    int n, const OccupationVector& kvec, int cut) {
  if (cut < 1 || cut > n - 1) {
    throw std::domain_error("qudit_schmidt_coefficients: need 1 <= cut < n");
  }
  std::vector<SchmidtCoefficient> out;
  const auto sectors = bounded_compositions(cut, kvec);
  for (std::size_t label = 0; label < sectors.size(); ++label) {
    out.push_back({qudit_schmidt_coeff(n, kvec, cut, sectors[label]),
                   static_cast<int>(label), static_cast<int>(label)});
  }
  return out;
}

namespace {

void emit_compositions(int pos, int remaining, OccupationVector& current,
                       const OccupationVector& bounds,
                       const std::vector<int>& suffix_capacity,
                       std::vector<OccupationVector>& out) {
  const int size = static_cast<int>(bounds.size());
  if (pos == size) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  if (remaining > suffix_capacity[pos]) return;
  const int top = std::min(bounds[pos], remaining);
  for (int v = 0; v <= top; ++v) {
    current[pos] = v;
    emit_compositions(pos + 1, remaining - v, current, bounds,
                      suffix_capacity, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<OccupationVector> bounded_compositions(
    int total, const OccupationVector& bounds) {
  std::vector<OccupationVector> out;
  if (total < 0) return out;
  for (int b : bounds) {
    if (b < 0) throw std::domain_error("bounded_compositions: negative bound");
  }
  const int size = static_cast<int>(bounds.size());
  std::vector<int> suffix_capacity(size + 1, 0);
  for (int pos = size - 1; pos >= 0; --pos) {
    suffix_capacity[pos] = suffix_capacity[pos + 1] + bounds[pos];
  }
  OccupationVector current(bounds.size(), 0);
  emit_compositions(0, total, current, bounds, suffix_capacity, out);
  return out;
}

DenseState dicke_state(int n, int k) {
  if (k < 0 || k > n) {
    throw std::domain_error("dicke_state: need 0 <= k <= n");
  }
  DenseState state(n, 2);
  const std::int64_t dim = state.dim();
  const double amp = 1.0 / std::sqrt(binomial(n, k).convert_to<double>());
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    if (std::popcount(static_cast<std::uint64_t>(idx)) == k) {
      state.amplitudes[idx] = amp;
    }
  }
  return state;
}

DenseState spin_dicke_state(int n, int k, int two_s) {
  if (two_s < 1) throw std::domain_error("spin_dicke_state: need 2s >= 1");
  if (k < 0 || k > two_s * n) {
    throw std::domain_error("spin_dicke_state: need 0 <= k <= 2s*n");
  }
  const int d = two_s + 1;
  DenseState state(n, d);
  const std::int64_t dim = state.dim();
  const double den = binomial(two_s * n, k).convert_to<double>();
  // C(2s, m) for each local digit m. Exactly representable; per-string
  // products are accumulated in extended precision.
  std::vector<long double> local(d);
  for (int m = 0; m < d; ++m) {
    local[m] = binomial(two_s, m).convert_to<long double>();
  }
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::int64_t rest = idx;
    int weight = 0;
    long double num = 1.0L;
    for (int site = 0; site < n; ++site) {
      const int m = static_cast<int>(rest % d);
      rest /= d;
      weight += m;
      num *= local[m];
    }
    if (weight == k) {
      state.amplitudes[idx] =
          static_cast<double>(std::sqrt(num / static_cast<long double>(den)));
    }
  }
  return state;
}

DenseState spin_lowering_oracle(int n, int k, int two_s) {
  if (two_s < 1) throw std::domain_error("spin_lowering_oracle: need 2s >= 1");
  if (k < 0 || k > two_s * n) {
    throw std::domain_error("spin_lowering_oracle: need 0 <= k <= 2s*n");
  }
  const int d = two_s + 1;
  DenseState state(n, d);
  const std::int64_t dim = state.dim();
  std::vector<double> cur(static_cast<std::size_t>(dim), 0.0);
  std::vector<double> next(static_cast<std::size_t>(dim), 0.0);
  cur[0] = 1.0;
  for (int step = 0; step < k; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      const double amp = cur[idx];
      if (amp == 0.0) continue;
      std::int64_t rest = idx;
      std::int64_t stride = 1;
      for (int site = 0; site < n; ++site) {
        const int m = static_cast<int>(rest % d);
        if (m < two_s) {
          next[idx + stride] += amp * std::sqrt((m + 1.0) * (two_s - m));
        }
        rest /= d;
        stride *= d;
      }
    }
    std::swap(cur, next);
  }
  long double norm2 = 0.0L;
  for (double v : cur) norm2 += static_cast<long double>(v) * v;
  const double norm = static_cast<double>(std::sqrt(norm2));
  if (norm == 0.0) {
    throw std::domain_error("spin_lowering_oracle: annihilated state");
  }
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    state.amplitudes[idx] = cur[idx] / norm;
  }
  return state;
}

DenseState qudit_dicke_state(int n, const OccupationVector& kvec) {
  validate_occupations("qudit_dicke_state", n, kvec);
  const int d = static_cast<int>(kvec.size());
  DenseState state(n, d);
  const std::int64_t dim = state.dim();
  const double amp = 1.0 / std::sqrt(multinomial(n, kvec).convert_to<double>());
#pragma omp parallel if (dim >= kParallelCutoff)
  {
    OccupationVector hist(kvec.size());
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      std::fill(hist.begin(), hist.end(), 0);
      std::int64_t rest = idx;
      for (int site = 0; site < n; ++site) {
        ++hist[rest % d];
        rest /= d;
      }
      if (hist == kvec) state.amplitudes[idx] = amp;
    }
  }
  return state;
}

}  // namespace dicke
