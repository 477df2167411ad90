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

#include <boost/multiprecision/cpp_int.hpp>

#include "dicke/types.hpp"

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k), exact. 0 for k < 0 or k > n; throws std::domain_error for n < 0.
BigInt binomial(int n, int k);

// n! / (parts_0! * ... * parts_{d-1}!), exact. 0 if any part is negative;
// throws std::domain_error unless the non-negative parts sum to n.
BigInt multinomial(int n, const OccupationVector& parts);

// sqrt(num / den) evaluated with a single rounding from exact integers.
double sqrt_ratio(const BigInt& num, const BigInt& den);

// Schmidt coefficient of the weight-k qubit Dicke state across the cut that
// separates the first i sites: sqrt(C(i,j) C(n-i,k-j) / C(n,k)). Zero when j
// is outside the support of the cut.
double hypergeom_coeff(int n, int k, int i, int j);

// Spin-s analogue with local dimension two_s + 1:
// sqrt(C(2s*i,j) C(2s*(n-i),k-j) / C(2s*n,k)).
double spin_hypergeom_coeff(int n, int k, int two_s, int i, int j);

// Qudit analogue for the cut after site l. avec holds the occupations
// carried by the first l sites; the value is
// sqrt(M(l,avec) M(n-l,kvec-avec) / M(n,kvec)) with M the multinomial.
// Zero when some avec_i exceeds kvec_i.
double qudit_schmidt_coeff(int n, const OccupationVector& kvec, int l,
                           const OccupationVector& avec);

// One Schmidt term of a bipartition: `value` is the coefficient,
// `left_index` labels the factor on the trailing sites, `right_index` the
// factor on the leading sites.
struct SchmidtCoefficient {
  double value = 0.0;
  int left_index = 0;
  int right_index = 0;
};

std::vector<SchmidtCoefficient> qubit_schmidt_coefficients(int n, int k,
                                                           int cut);
std::vector<SchmidtCoefficient> spin_schmidt_coefficients(int n, int k,
                                                          int two_s, int cut);
std::vector<SchmidtCoefficient> qudit_schmidt_coefficients(
    int n, const OccupationVector& kvec, int cut);

// All vectors a with 0 <= a_i <= bounds_i and sum(a) = total, in ascending
// lexicographic order. Empty when total is out of range.
std::vector<OccupationVector> bounded_compositions(
    int total, const OccupationVector& bounds);

// Uniform superposition of all n-qubit basis states of Hamming weight k.
DenseState dicke_state(int n, int k);

// Weight-k Dicke state of n spins with local dimension two_s + 1. The
// amplitude on a digit string (m_1, ..., m_n) with sum k is
// sqrt(prod_i C(2s, m_i) / C(2s*n, k)).
DenseState spin_dicke_state(int n, int k, int two_s);

// Same state produced by k applications of the collective lowering operator
// to the all-zero string, then normalization. Independent construction used
// to cross-check spin_dicke_state.
DenseState spin_lowering_oracle(int n, int k, int two_s);

// Uniform-multiset qudit Dicke state: equal amplitude 1/sqrt(M(n,kvec)) on
// every string whose digit histogram equals kvec.
DenseState qudit_dicke_state(int n, const OccupationVector& kvec);

}  // namespace dicke
