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

#include "dicke/schmidt.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <stdexcept>

#include "dicke/core.hpp"

namespace dicke::schmidt {

namespace {

void check_cut(const char* who, int n, int cut) {
  if (cut < 1 || cut > n - 1) {
    throw std::domain_error(std::string(who) + ": need 1 <= cut <= n-1");
  }
}

// Adds coeff * (outer tensor inner) where inner covers sites 1..cut and
// outer the rest.
void add_product(DenseState& out, double coeff, const DenseState& outer,
                 const DenseState& inner) {
  const std::int64_t inner_dim = inner.dim();
  for (std::int64_t hi = 0; hi < outer.dim(); ++hi) {
    const cplx weight = coeff * outer.amplitudes[hi];
    if (weight == cplx{0.0, 0.0}) continue;
    for (std::int64_t lo = 0; lo < inner_dim; ++lo) {
      out.amplitudes[hi * inner_dim + lo] += weight * inner.amplitudes[lo];
    }
  }
}

}  // namespace

SchmidtSpectrum schmidt_spectrum(const DenseState& state, int cut,
                                 double tol) {
  check_cut("schmidt_spectrum", state.n, cut);
  const std::int64_t cols = pow_i64(state.d, cut);
  const std::int64_t rows = pow_i64(state.d, state.n - cut);
  if (rows * cols != state.dim()) {
    throw std::invalid_argument("schmidt_spectrum: amplitude count mismatch");
  }
  Eigen::MatrixXcd mat(rows, cols);
  for (std::int64_t hi = 0; hi < rows; ++hi) {
    for (std::int64_t lo = 0; lo < cols; ++lo) {
      mat(hi, lo) = state.amplitudes[hi * cols + lo];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
  SchmidtSpectrum spectrum;
  spectrum.cut = cut;
  const auto& sv = svd.singularValues();
  spectrum.values.assign(sv.data(), sv.data() + sv.size());
  spectrum.rank = 0;
  for (double v : spectrum.values) {
    if (v > tol) ++spectrum.rank;
  }
  return spectrum;
}

DenseState reconstruct_qubit(int n, int k, int cut) {
  check_cut("reconstruct_qubit", n, cut);
  DenseState out(n, 2);
  for (const SchmidtCoefficient& term : qubit_schmidt_coefficients(n, k, cut)) {
    add_product(out, term.value, dicke_state(n - cut, term.left_index),
                dicke_state(cut, term.right_index));
  }
  return out;
}

DenseState reconstruct_spin(int n, int k, int two_s, int cut) {
  check_cut("reconstruct_spin", n, cut);
  DenseState out(n, two_s + 1);
  for (const SchmidtCoefficient& term :
       spin_schmidt_coefficients(n, k, two_s, cut)) {
    add_product(out, term.value,
                spin_dicke_state(n - cut, term.left_index, two_s),
                spin_dicke_state(cut, term.right_index, two_s));
  }
  return out;
}

DenseState reconstruct_qudit(int n, const OccupationVector& kvec, int cut) {
  check_cut("reconstruct_qudit", n, cut);
  DenseState out(n, static_cast<int>(kvec.size()));
  for (const OccupationVector& avec : bounded_compositions(cut, kvec)) {
    OccupationVector rest(kvec.size());
    for (std::size_t t = 0; t < kvec.size(); ++t) rest[t] = kvec[t] - avec[t];
    add_product(out, qudit_schmidt_coeff(n, kvec, cut, avec),
                qudit_dicke_state(n - cut, rest), qudit_dicke_state(cut, avec));
  }
  return out;
}

}  // namespace dicke::schmidt
