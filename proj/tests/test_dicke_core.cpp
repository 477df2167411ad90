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

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "dicke/core.hpp"

using namespace dicke;

namespace {

double diff(const DenseState& a, const DenseState& b) {
  return max_abs_diff(a.amplitudes, b.amplitudes);
}

// Remaps every basis index by exchanging the digits at two sites.
DenseState permute_sites(const DenseState& state, int p, int q) {
  DenseState out(state.n, state.d);
  const std::int64_t stride_p = pow_i64(state.d, p - 1);
  const std::int64_t stride_q = pow_i64(state.d, q - 1);
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    const int dp = digit_at(idx, p, state.d);
    const int dq = digit_at(idx, q, state.d);
    const std::int64_t swapped =
        idx + (dq - dp) * stride_p + (dp - dq) * stride_q;
    out.amplitudes[swapped] = state.amplitudes[idx];
  }
  return out;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial matches a Pascal triangle") {
  constexpr int kRows = 40;
  std::vector<std::vector<BigInt>> pascal(kRows + 1);
  for (int n = 0; n <= kRows; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) {
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == pascal[n][k]);
    }
  }
}

TEST_CASE("multinomial basics") {
  CHECK(multinomial(4, {2, 1, 1}) == 12);
  CHECK(multinomial(4, {4, 0, 0}) == 1);
  CHECK(multinomial(6, {2, 2, 2}) == 90);
  CHECK(multinomial(3, {-1, 2, 2}) == 0);  // negative part annihilates
  CHECK_THROWS_AS(multinomial(5, {2, 1, 1}), std::domain_error);
  // Two-level multinomials reduce to binomials.
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(multinomial(n, {n - k, k}) == binomial(n, k));
    }
  }
}

TEST_CASE("hypergeometric coefficient frozen values") {
  CHECK(std::abs(hypergeom_coeff(4, 2, 1, 1) - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(hypergeom_coeff(4, 2, 2, 1) - std::sqrt(4.0 / 6.0)) < 1e-15);
  CHECK(hypergeom_coeff(4, 2, 2, 3) == 0.0);   // j beyond the cut support
  CHECK(hypergeom_coeff(4, 2, 1, 2) == 0.0);   // more weight than sites
  CHECK(hypergeom_coeff(6, 0, 3, 0) == 1.0);
  CHECK_THROWS_AS(hypergeom_coeff(4, 5, 1, 0), std::domain_error);
  CHECK_THROWS_AS(hypergeom_coeff(4, 2, 5, 0), std::domain_error);
}

TEST_CASE("hypergeometric coefficients square-sum to one") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= n; ++i) {
        double sum = 0.0;
        for (int j = 0; j <= k; ++j) {
          const double c = hypergeom_coeff(n, k, i, j);
          sum += c * c;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("spin coefficient frozen values and reduction") {
  CHECK(std::abs(spin_hypergeom_coeff(4, 2, 2, 1, 1) -
                 std::sqrt(12.0 / 28.0)) < 1e-15);
  CHECK(spin_hypergeom_coeff(4, 8, 2, 4, 8) == 1.0);
  CHECK_THROWS_AS(spin_hypergeom_coeff(4, 9, 2, 1, 0), std::domain_error);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= k; ++j) {
          CHECK(std::abs(spin_hypergeom_coeff(n, k, 1, i, j) -
                         hypergeom_coeff(n, k, i, j)) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("spin coefficients square-sum to one") {
  for (int two_s = 1; two_s <= 4; ++two_s) {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; k <= two_s * n; ++k) {
        for (int i = 0; i <= n; ++i) {
          double sum = 0.0;
          for (int j = 0; j <= k; ++j) {
            const double c = spin_hypergeom_coeff(n, k, two_s, i, j);
            sum += c * c;
          }
          CHECK(std::abs(sum - 1.0) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("qudit coefficient frozen values") {
  CHECK(std::abs(qudit_schmidt_coeff(4, {2, 1, 1}, 2, {1, 1, 0}) -
                 std::sqrt(1.0 / 3.0)) < 1e-15);
  CHECK(qudit_schmidt_coeff(4, {2, 1, 1}, 4, {2, 1, 1}) == 1.0);
  CHECK(qudit_schmidt_coeff(4, {2, 1, 1}, 2, {0, 2, 0}) == 0.0);
  CHECK_THROWS_AS(qudit_schmidt_coeff(4, {2, 1, 1}, 2, {1, 1, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(qudit_schmidt_coeff(5, {2, 1, 1}, 2, {1, 1, 0}),
                  std::domain_error);
}

TEST_CASE("qudit coefficients square-sum to one over each sector") {
  const std::vector<std::pair<int, OccupationVector>> instances = {
      {3, {1, 1, 1}}, {4, {1, 1, 2}}, {5, {1, 2, 2}}, {6, {2, 2, 2}}};
  for (const auto& [n, kvec] : instances) {
    for (int l = 1; l <= n - 1; ++l) {
      double sum = 0.0;
      for (const auto& avec : bounded_compositions(l, kvec)) {
        const double c = qudit_schmidt_coeff(n, kvec, l, avec);
        sum += c * c;
      }
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("bounded compositions are lexicographic and complete") {
  const auto list = bounded_compositions(2, {2, 1, 1});
  REQUIRE(list.size() == 4);
  CHECK(list[0] == OccupationVector{0, 1, 1});
  CHECK(list[1] == OccupationVector{1, 0, 1});
  CHECK(list[2] == OccupationVector{1, 1, 0});
  CHECK(list[3] == OccupationVector{2, 0, 0});
  CHECK(bounded_compositions(0, {2, 1, 1}) ==
        std::vector<OccupationVector>{{0, 0, 0}});
  CHECK(bounded_compositions(4, {2, 1, 1}) ==
        std::vector<OccupationVector>{{2, 1, 1}});
  CHECK(bounded_compositions(5, {2, 1, 1}).empty());
  for (std::size_t t = 1; t < list.size(); ++t) {
    CHECK(list[t - 1] < list[t]);
  }
}

TEST_CASE("qubit Dicke state frozen values") {
  const DenseState state = dicke_state(4, 2);
  const double amp = 1.0 / std::sqrt(6.0);
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    const bool hot = idx == 3 || idx == 5 || idx == 6 || idx == 9 ||
                     idx == 10 || idx == 12;
    CHECK(std::abs(state.amplitudes[idx] - (hot ? amp : 0.0)) < 1e-15);
  }
  const DenseState w = dicke_state(3, 1);
  CHECK(std::abs(w.amplitudes[1] - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(w.amplitudes[2] - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(w.amplitudes[4] - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(dicke_state(5, 0).amplitudes[0] - 1.0) == 0.0);
  CHECK_THROWS_AS(dicke_state(3, 4), std::domain_error);
  CHECK_THROWS_AS(dicke_state(3, -1), std::domain_error);
}

TEST_CASE("spin Dicke state frozen values") {
  const DenseState state = spin_dicke_state(4, 2, 2);
  const double pair_amp = 1.0 / std::sqrt(7.0);     // two singly excited spins
  const double double_amp = 0.5 / std::sqrt(7.0);   // one doubly excited spin
  for (std::int64_t idx : {4, 10, 12, 28, 30, 36}) {
    CHECK(std::abs(state.amplitudes[idx] - pair_amp) < 1e-15);
  }
  for (std::int64_t idx : {2, 6, 18, 54}) {
    CHECK(std::abs(state.amplitudes[idx] - double_amp) < 1e-15);
  }
  const DenseState two = spin_dicke_state(2, 2, 2);
  CHECK(std::abs(two.amplitudes[2] - std::sqrt(1.0 / 6.0)) < 1e-15);
  CHECK(std::abs(two.amplitudes[4] - std::sqrt(4.0 / 6.0)) < 1e-15);
  CHECK(std::abs(two.amplitudes[6] - std::sqrt(1.0 / 6.0)) < 1e-15);
  CHECK_THROWS_AS(spin_dicke_state(2, 5, 2), std::domain_error);
  CHECK_THROWS_AS(spin_dicke_state(2, 1, 0), std::domain_error);
}

TEST_CASE("spin states with 2s = 1 reduce to qubit states") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(diff(spin_dicke_state(n, k, 1), dicke_state(n, k)) < 1e-15);
    }
  }
}

TEST_CASE("lowering-operator construction matches the closed form") {
  for (int two_s = 1; two_s <= 4; ++two_s) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= two_s * n; ++k) {
        CHECK(diff(spin_lowering_oracle(n, k, two_s),
                   spin_dicke_state(n, k, two_s)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(spin_lowering_oracle(2, 5, 2), std::domain_error);
}

TEST_CASE("qudit Dicke state frozen values") {
  const DenseState state = qudit_dicke_state(4, {2, 1, 1});
  const double amp = 1.0 / std::sqrt(12.0);
  int hot = 0;
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    OccupationVector hist(3, 0);
    for (int site = 1; site <= 4; ++site) ++hist[digit_at(idx, site, 3)];
    if (hist == OccupationVector{2, 1, 1}) {
      CHECK(std::abs(state.amplitudes[idx] - amp) < 1e-15);
      ++hot;
    } else {
      CHECK(std::abs(state.amplitudes[idx]) == 0.0);
    }
  }
  CHECK(hot == 12);
  CHECK(std::abs(qudit_dicke_state(3, {3, 0, 0}).amplitudes[0] - 1.0) == 0.0);
  CHECK_THROWS_AS(qudit_dicke_state(4, {2, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(qudit_dicke_state(4, {5, -1}), std::domain_error);
}

TEST_CASE("two-level qudit states reduce to qubit states") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(diff(qudit_dicke_state(n, {n - k, k}), dicke_state(n, k)) < 1e-15);
    }
  }
}

TEST_CASE("all families produce normalized states") {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(is_normalized(dicke_state(n, k)));
    }
  }
  for (int two_s = 1; two_s <= 4; ++two_s) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= two_s * n; ++k) {
        CHECK(is_normalized(spin_dicke_state(n, k, two_s)));
      }
    }
  }
  for (const auto& kvec :
       {OccupationVector{1, 1, 1}, OccupationVector{1, 1, 2},
        OccupationVector{2, 2, 2}, OccupationVector{1, 2, 2}}) {
    CHECK(is_normalized(qudit_dicke_state(occupation_sum(kvec), kvec)));
  }
}

TEST_CASE("states are permutation symmetric") {
  std::mt19937 rng(20260815);
  const std::vector<DenseState> states = {
      dicke_state(6, 2), spin_dicke_state(4, 3, 2),
      qudit_dicke_state(5, {2, 2, 1})};
  for (const DenseState& state : states) {
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> pick(1, state.n);
      const int p = pick(rng);
      const int q = pick(rng);
      CHECK(diff(permute_sites(state, p, q), state) == 0.0);
    }
  }
}
