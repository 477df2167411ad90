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

#include <Eigen/Dense>

#include "dicke/core.hpp"

namespace dicke::mps {

// Matrix-product state with open boundaries. The amplitude of the digit
// string (m_1, ..., m_n) is left^dagger * A_n^{m_n} ... A_1^{m_1} * right,
// with sites[i-1][m] holding A_i^m. All matrices are chi x chi.
struct MpsChain {
  int n = 0;
  int d = 2;
  int chi = 0;
  std::vector<std::vector<Eigen::MatrixXcd>> sites;
  Eigen::VectorXcd left;
  Eigen::VectorXcd right;
};

// Entry gamma at row j+m, column j of the site-i qubit tensor:
// sqrt(C(n-i, k-j-m) / C(n-i+1, k-j)), or 0 when k-j > n-i+1 (the column is
// unreachable at this site). m is the physical digit.
double qubit_site_entry(int n, int k, int i, int j, int m);

// Spin generalization: sqrt(C(2s,m) C(2s(n-i), k-j-m) / C(2s(n-i+1), k-j)).
double spin_site_entry(int n, int k, int two_s, int i, int j, int m);

// Qudit site entry for the transition from sector vector avec (after site
// l-1) to avec + e_m: sqrt(M(n-l, kvec-avec-e_m) / M(n-l+1, kvec-avec)).
// Zero when avec_m = kvec_m (level m is exhausted).
double qudit_site_entry(int n, const OccupationVector& kvec, int l,
                        const OccupationVector& avec, int m);

// The two (k+1) x (k+1) matrices A_i^0, A_i^1 of the weight-k chain.
// Rejects 2k > n; build the complement-weight state and flip all qubits
// instead.
std::vector<Eigen::MatrixXcd> qubit_site_matrices(int n, int k, int i);

// Same with the trailing-site correction that restores left-orthonormality:
// identity is added on the columns that carry no weight at site i.
std::vector<Eigen::MatrixXcd> qubit_site_matrices_strict(int n, int k, int i);

// The two_s + 1 site matrices of the weight-k spin chain at site i. Rejects
// 2k > 2s*n; build the complement 2s*n - k instead.
std::vector<Eigen::MatrixXcd> spin_site_matrices(int n, int k, int two_s,
                                                 int i);

// Site-independent matrices A^m = sqrt(C(2s,m) / (2s)^m) * (J^-)^m with J^-
// the lowering operator of the (k+1)-dimensional ancilla spin. The uniform
// chain contracts to a state proportional to the spin Dicke state but is not
// left-orthonormal.
std::vector<Eigen::MatrixXcd> ti_site_matrices(int k, int two_s);

// Lexicographically ordered occupation sectors for every bond 0..n of a
// qudit chain. label(l, a) is the row/column index of sector vector a on
// bond l. chi is the largest sector count, attained at the middle bond.
struct SectorLabeling {
  int n = 0;
  OccupationVector kvec;
  std::vector<std::vector<OccupationVector>> sectors;
  int chi = 0;

  int size(int l) const;
  int label(int l, const OccupationVector& a) const;  // -1 when absent
};

SectorLabeling enumerate_sectors(int n, const OccupationVector& kvec);

// The d site matrices of the qudit chain at site l, chi x chi, with rows
// and columns indexed by labeling. Each column holds at most one nonzero
// entry per physical digit.
std::vector<Eigen::MatrixXcd> qudit_site_matrices(int n,
                                                  const OccupationVector& kvec,
                                                  int l,
                                                  const SectorLabeling& labeling);

MpsChain qubit_chain(int n, int k, bool strict = false);
MpsChain spin_chain(int n, int k, int two_s);
MpsChain ti_chain(int n, int k, int two_s);
MpsChain qudit_chain(int n, const OccupationVector& kvec);

// Evaluates every amplitude of the chain. Parallel over basis strings; each
// string is an independent chain of matrix-vector products.
DenseState contract(const MpsChain& chain);

// max-norm of sum_m A_i^m^dagger A_i^m - identity at the 1-based site.
double canonicity_residual(const MpsChain& chain, int site);

// Residuals for all sites 1..n.
std::vector<double> canonicity_residuals(const MpsChain& chain);

namespace reference {

// Single-threaded contraction that forms the full matrix product per basis
// string. Kept as an independent route for testing the parallel kernel.
DenseState contract(const MpsChain& chain);

}  // namespace reference

}  // namespace dicke::mps
