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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "dicke/core.hpp"
#include "dicke/schmidt.hpp"

using namespace dicke;

namespace {

double diff(const DenseState& a, const DenseState& b) {
  return max_abs_diff(a.amplitudes, b.amplitudes);
}

double spectrum_vs(const schmidt::SchmidtSpectrum& spectrum,
                   std::vector<double> coeffs) {
  std::sort(coeffs.begin(), coeffs.end(), std::greater<>());
  double worst = 0.0;
  const std::size_t len = std::max(spectrum.values.size(), coeffs.size());
  for (std::size_t t = 0; t < len; ++t) {
    const double sv = t < spectrum.values.size() ? spectrum.values[t] : 0.0;
    const double cf = t < coeffs.size() ? coeffs[t] : 0.0;
    worst = std::max(worst, std::abs(sv - cf));
  }
  return worst;
}

}  // namespace

TEST_CASE("spectrum of the four-qubit half state, frozen") {
  const auto spectrum = schmidt::schmidt_spectrum(dicke_state(4, 2), 2);
  REQUIRE(spectrum.rank == 3);
  CHECK(std::abs(spectrum.values[0] - std::sqrt(4.0 / 6.0)) < 1e-12);
  CHECK(std::abs(spectrum.values[1] - std::sqrt(1.0 / 6.0)) < 1e-12);
  CHECK(std::abs(spectrum.values[2] - std::sqrt(1.0 / 6.0)) < 1e-12);
  CHECK(std::is_sorted(spectrum.values.begin(), spectrum.values.end(),
                       std::greater<>()));
}

TEST_CASE("spectrum basics") {
  // Product state: rank 1 at every cut.
  DenseState product(3, 2);
  product.amplitudes[0] = 1.0;
  for (int cut = 1; cut <= 2; ++cut) {
    CHECK(schmidt::schmidt_spectrum(product, cut).rank == 1);
  }
  CHECK_THROWS_AS(schmidt::schmidt_spectrum(product, 0), std::domain_error);
  CHECK_THROWS_AS(schmidt::schmidt_spectrum(product, 3), std::domain_error);
}

TEST_CASE("singular values are normalized") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int cut = 1; cut <= n - 1; ++cut) {
        const auto spectrum = schmidt::schmidt_spectrum(dicke_state(n, k), cut);
        double sum = 0.0;
        for (double v : spectrum.values) sum += v * v;
        CHECK(std::abs(sum - 1.0) < 1e-10);
      }
    }
  }
}

TEST_CASE("qubit cut ranks follow the weight-splitting count") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int cut = 1; cut <= n - 1; ++cut) {
        const int expected =
            std::min(k, cut) - std::max(0, k - (n - cut)) + 1;
        CHECK(schmidt::schmidt_spectrum(dicke_state(n, k), cut).rank ==
              expected);
      }
    }
  }
}

TEST_CASE("qubit reconstruction is exact at every cut") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const DenseState direct = dicke_state(n, k);
      for (int cut = 1; cut <= n - 1; ++cut) {
        CHECK(diff(schmidt::reconstruct_qubit(n, k, cut), direct) < 1e-12);
        CHECK(spectrum_vs(schmidt::schmidt_spectrum(direct, cut), [&] {
                std::vector<double> coeffs;
                for (const auto& term : qubit_schmidt_coefficients(n, k, cut))
                  coeffs.push_back(term.value);
                return coeffs;
              }()) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(schmidt::reconstruct_qubit(4, 2, 0), std::domain_error);
}

TEST_CASE("spin reconstruction is exact at every cut") {
  for (int two_s = 1; two_s <= 3; ++two_s) {
    for (int n = 2; n <= 4; ++n) {
      for (int k = 0; k <= two_s * n; ++k) {
        const DenseState direct = spin_dicke_state(n, k, two_s);
        for (int cut = 1; cut <= n - 1; ++cut) {
          CHECK(diff(schmidt::reconstruct_spin(n, k, two_s, cut), direct) <
                1e-12);
          std::vector<double> coeffs;
          for (const auto& term :
               spin_schmidt_coefficients(n, k, two_s, cut)) {
            coeffs.push_back(term.value);
          }
          const auto spectrum = schmidt::schmidt_spectrum(direct, cut);
          CHECK(spectrum_vs(spectrum, coeffs) < 1e-10);
          CHECK(spectrum.rank == static_cast<int>(coeffs.size()));
        }
      }
    }
  }
}

TEST_CASE("heavy odd spin chains lose one Schmidt term at the middle cut") {
  // For n=5, 2s=2, k=5 no cut can host k+1 = 6 terms: the middle cut splits
  // at 2|3 sites, capping the left weight at 4. The rank there is k, one
  // below the chain bond dimension, and the reconstruction stays exact.
  const DenseState direct = spin_dicke_state(5, 5, 2);
  const auto middle = schmidt::schmidt_spectrum(direct, 2);
  CHECK(middle.rank == 5);
  for (int cut = 1; cut <= 4; ++cut) {
    CHECK(diff(schmidt::reconstruct_spin(5, 5, 2, cut), direct) < 1e-12);
    const int expected =
        std::min(5, 2 * cut) - std::max(0, 5 - 2 * (5 - cut)) + 1;
    CHECK(schmidt::schmidt_spectrum(direct, cut).rank == expected);
  }
}

TEST_CASE("qudit reconstruction is exact at every cut") {
  const std::vector<OccupationVector> instances = {
      {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 1, 1}};
  for (const auto& kvec : instances) {
    const int n = occupation_sum(kvec);
    const DenseState direct = qudit_dicke_state(n, kvec);
    for (int cut = 1; cut <= n - 1; ++cut) {
      CHECK(diff(schmidt::reconstruct_qudit(n, kvec, cut), direct) < 1e-12);
      std::vector<double> coeffs;
      for (const auto& term : qudit_schmidt_coefficients(n, kvec, cut)) {
        coeffs.push_back(term.value);
      }
      const auto spectrum = schmidt::schmidt_spectrum(direct, cut);
      CHECK(spectrum_vs(spectrum, coeffs) < 1e-10);
      // Every sector contributes a strictly positive coefficient.
      CHECK(spectrum.rank == static_cast<int>(coeffs.size()));
    }
  }
}

TEST_CASE("qudit cut ranks equal the sector counts") {
  const OccupationVector kvec = {1, 1, 2};
  const DenseState direct = qudit_dicke_state(4, kvec);
  const std::vector<int> expected = {3, 4, 3};  // cuts 1, 2, 3
  for (int cut = 1; cut <= 3; ++cut) {
    CHECK(schmidt::schmidt_spectrum(direct, cut).rank == expected[cut - 1]);
  }
}
