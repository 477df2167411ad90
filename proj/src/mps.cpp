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

#include "dicke/mps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke::mps {

namespace {

void check_site_index(const char* who, int n, int i) {
  if (i < 1 || i > n) {
    throw std::domain_error(std::string(who) + ": need 1 <= i <= n");
  }
}

void reject_heavy_half(const char* who, int k, int weight_capacity) {
  if (2 * k > weight_capacity) {
    throw std::domain_error(
        std::string(who) +
        ": weight exceeds half the capacity; build the complement weight " +
        "and relabel the physical digits m -> d-1-m instead");
  }
}

void check_chain(const MpsChain& chain) {
  if (chain.n < 1 || chain.d < 2 || chain.chi < 1) {
    throw std::invalid_argument("chain: malformed header");
  }
  if (static_cast<int>(chain.sites.size()) != chain.n) {
    throw std::invalid_argument("chain: wrong number of sites");
  }
  for (const auto& site : chain.sites) {
    if (static_cast<int>(site.size()) != chain.d) {
      throw std::invalid_argument("chain: wrong number of site matrices");
    }
    for (const auto& mat : site) {
      if (mat.rows() != chain.chi || mat.cols() != chain.chi) {
        throw std::invalid_argument("chain: site matrix dimension mismatch");
      }
    }
  }
  if (chain.left.size() != chain.chi || chain.right.size() != chain.chi) {
    throw std::invalid_argument("chain: boundary dimension mismatch");
  }
}

Eigen::VectorXcd unit_vector(int dim, int pos) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(pos) = 1.0;
  return v;
}

}  // namespace

double qubit_site_entry(int n, int k, int i, int j, int m) {
  if (m != 0 && m != 1) {
    throw std::domain_error("qubit_site_entry: need m in {0, 1}");
  }
  if (k < 0 || k > n) throw std::domain_error("qubit_site_entry: need 0 <= k <= n");
  if (j < 0 || j > k) throw std::domain_error("qubit_site_entry: need 0 <= j <= k");
  check_site_index("qubit_site_entry", n, i);
  if (k - j > n - i + 1) return 0.0;  // too few sites left to place the rest
  return sqrt_ratio(binomial(n - i, k - j - m), binomial(n - i + 1, k - j));
}

double spin_site_entry(int n, int k, int two_s, int i, int j, int m) {
  if (two_s < 1) throw std::domain_error("spin_site_entry: need 2s >= 1");
  if (m < 0 || m > two_s) {
    throw std::domain_error("spin_site_entry: need 0 <= m <= 2s");
  }
  if (k < 0 || k > two_s * n) {
    throw std::domain_error("spin_site_entry: need 0 <= k <= 2s*n");
  }
  if (j < 0 || j > k) throw std::domain_error("spin_site_entry: need 0 <= j <= k");
  check_site_index("spin_site_entry", n, i);
  if (k - j > two_s * (n - i + 1)) return 0.0;
  return sqrt_ratio(
      binomial(two_s, m) * binomial(two_s * (n - i), k - j - m),
      binomial(two_s * (n - i + 1), k - j));
}

double qudit_site_entry(int n, const OccupationVector& kvec, int l,
                        const OccupationVector& avec, int m) {
  const int d = static_cast<int>(kvec.size());
  if (m < 0 || m >= d) {
    throw std::domain_error("qudit_site_entry: need 0 <= m < d");
  }
  check_site_index("qudit_site_entry", n, l);
  if (avec.size() != kvec.size()) {
    throw std::domain_error("qudit_site_entry: level-count mismatch");
  }
  if (occupation_sum(avec) != l - 1) {
    throw std::domain_error("qudit_site_entry: avec must sum to l-1");
  }
  for (std::size_t t = 0; t < avec.size(); ++t) {
    if (avec[t] < 0 || avec[t] > kvec[t]) {
      throw std::domain_error("qudit_site_entry: avec outside sector");
    }
  }
  if (avec[m] == kvec[m]) return 0.0;  // level m exhausted
  OccupationVector rest(kvec.size());
  for (std::size_t t = 0; t < kvec.size(); ++t) rest[t] = kvec[t] - avec[t];
  const BigInt den = multinomial(n - l + 1, rest);
  rest[m] -= 1;
  const BigInt num = multinomial(n - l, rest);
  return sqrt_ratio(num, den);
}

std::vector<Eigen::MatrixXcd> qubit_site_matrices(int n, int k, int i) {
  if (k < 0 || k > n) {
    throw std::domain_error("qubit_site_matrices: need 0 <= k <= n");
  }
  reject_heavy_half("qubit_site_matrices", k, n);
  check_site_index("qubit_site_matrices", n, i);
  const int chi = k + 1;
  std::vector<Eigen::MatrixXcd> mats(2, Eigen::MatrixXcd::Zero(chi, chi));
  for (int m = 0; m <= 1; ++m) {
    for (int j = 0; j + m <= k; ++j) {
      mats[m](j + m, j) = qubit_site_entry(n, k, i, j, m);
    }
  }
  return mats;
}

std::vector<Eigen::MatrixXcd> qubit_site_matrices_strict(int n, int k, int i) {
  auto mats = qubit_site_matrices(n, k, i);
  // Columns j <= k+i-n-2 are unreachable this close to the right boundary;
  // padding A^0 with identity there completes the isometry.
  for (int j = 0; j <= k + i - n - 2; ++j) {
    mats[0](j, j) += 1.0;
  }
  return mats;
}

std::vector<Eigen::MatrixXcd> spin_site_matrices(int n, int k, int two_s,
                                                 int i) {
  if (two_s < 1) throw std::domain_error("spin_site_matrices: need 2s >= 1");
  if (k < 0 || k > two_s * n) {
    throw std::domain_error("spin_site_matrices: need 0 <= k <= 2s*n");
  }
  reject_heavy_half("spin_site_matrices", k, two_s * n);
  check_site_index("spin_site_matrices", n, i);
  const int chi = k + 1;
  std::vector<Eigen::MatrixXcd> mats(two_s + 1,
                                     Eigen::MatrixXcd::Zero(chi, chi));
  for (int m = 0; m <= two_s; ++m) {
    for (int j = 0; j + m <= k; ++j) {
      mats[m](j + m, j) = spin_site_entry(n, k, two_s, i, j, m);
    }
  }
  return mats;
}

std::vector<Eigen::MatrixXcd> ti_site_matrices(int k, int two_s) {
  if (k < 0) throw std::domain_error("ti_site_matrices: need k >= 0");
  if (two_s < 1) throw std::domain_error("ti_site_matrices: need 2s >= 1");
  const int chi = k + 1;
  Eigen::MatrixXcd lowering = Eigen::MatrixXcd::Zero(chi, chi);
  for (int j = 0; j + 1 <= k; ++j) {
    lowering(j + 1, j) = std::sqrt((j + 1.0) * (k - j));
  }
  std::vector<Eigen::MatrixXcd> mats;
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(chi, chi);
  BigInt scale_den = 1;
  for (int m = 0; m <= two_s; ++m) {
    mats.push_back(sqrt_ratio(binomial(two_s, m), scale_den) * power);
    power = lowering * power;
    scale_den *= two_s;
  }
  return mats;
}

int SectorLabeling::size(int l) const {
  if (l < 0 || l > n) {
    throw std::domain_error("SectorLabeling::size: need 0 <= l <= n");
  }
  return static_cast<int>(sectors[l].size());
}

int SectorLabeling::label(int l, const OccupationVector& a) const {
  if (l < 0 || l > n) {
    throw std::domain_error("SectorLabeling::label: need 0 <= l <= n");
  }
  const auto& list = sectors[l];
  const auto it = std::lower_bound(list.begin(), list.end(), a);
  if (it == list.end() || *it != a) return -1;
  return static_cast<int>(it - list.begin());
}

SectorLabeling enumerate_sectors(int n, const OccupationVector& kvec) {
  if (kvec.size() < 2) {
    throw std::domain_error("enumerate_sectors: need at least two levels");
  }
  for (int v : kvec) {
    if (v < 0) throw std::domain_error("enumerate_sectors: negative count");
  }
  if (occupation_sum(kvec) != n) {
    throw std::domain_error("enumerate_sectors: counts must sum to n");
  }
  SectorLabeling labeling;
  labeling.n = n;
  labeling.kvec = kvec;
  labeling.sectors.resize(n + 1);
  for (int l = 0; l <= n; ++l) {
    labeling.sectors[l] = bounded_compositions(l, kvec);
  }
  labeling.chi = static_cast<int>(labeling.sectors[n / 2].size());
  return labeling;
}

std::vector<Eigen::MatrixXcd> qudit_site_matrices(
    int n, const OccupationVector& kvec, int l,
    const SectorLabeling& labeling) {
  if (labeling.n != n || labeling.kvec != kvec) {
    throw std::domain_error("qudit_site_matrices: labeling mismatch");
  }
  check_site_index("qudit_site_matrices", n, l);
  const int d = static_cast<int>(kvec.size());
  const int chi = labeling.chi;
  std::vector<Eigen::MatrixXcd> mats(d, Eigen::MatrixXcd::Zero(chi, chi));
  for (const OccupationVector& a : labeling.sectors[l - 1]) {
    const int col = labeling.label(l - 1, a);
    for (int m = 0; m < d; ++m) {
      if (a[m] == kvec[m]) continue;
      OccupationVector b = a;
      ++b[m];
      const int row = labeling.label(l, b);
      if (row < 0) {
        throw std::logic_error("qudit_site_matrices: successor sector missing");
      }
      mats[m](row, col) = qudit_site_entry(n, kvec, l, a, m);
    }
  }
  return mats;
}

MpsChain qubit_chain(int n, int k, bool strict) {
  if (n < 1) throw std::domain_error("qubit_chain: need n >= 1");
  MpsChain chain;
  chain.n = n;
  chain.d = 2;
  chain.chi = k + 1;
  for (int i = 1; i <= n; ++i) {
    chain.sites.push_back(strict ? qubit_site_matrices_strict(n, k, i)
                                 : qubit_site_matrices(n, k, i));
  }
  chain.left = unit_vector(chain.chi, k);
  chain.right = unit_vector(chain.chi, 0);
  return chain;
}

MpsChain spin_chain(int n, int k, int two_s) {
  if (n < 1) throw std::domain_error("spin_chain: need n >= 1");
  MpsChain chain;
  chain.n = n;
  chain.d = two_s + 1;
  chain.chi = k + 1;
  for (int i = 1; i <= n; ++i) {
    chain.sites.push_back(spin_site_matrices(n, k, two_s, i));
  }
  chain.left = unit_vector(chain.chi, k);
  chain.right = unit_vector(chain.chi, 0);
  return chain;
}

MpsChain ti_chain(int n, int k, int two_s) {
  if (n < 1) throw std::domain_error("ti_chain: need n >= 1");
  if (k > two_s * n) throw std::domain_error("ti_chain: need k <= 2s*n");
  MpsChain chain;
  chain.n = n;
  chain.d = two_s + 1;
  chain.chi = k + 1;
  const auto mats = ti_site_matrices(k, two_s);
  chain.sites.assign(n, mats);
  chain.left = unit_vector(chain.chi, k);
  chain.right = unit_vector(chain.chi, 0);
  return chain;
}

MpsChain qudit_chain(int n, const OccupationVector& kvec) {
  const SectorLabeling labeling = enumerate_sectors(n, kvec);
  MpsChain chain;
  chain.n = n;
  chain.d = static_cast<int>(kvec.size());
  chain.chi = labeling.chi;
  for (int l = 1; l <= n; ++l) {
    chain.sites.push_back(qudit_site_matrices(n, kvec, l, labeling));
  }
  chain.left = unit_vector(chain.chi, 0);
  chain.right = unit_vector(chain.chi, 0);
  return chain;
}

DenseState contract(const MpsChain& chain) {
  check_chain(chain);
  DenseState state(chain.n, chain.d);
  const std::int64_t dim = state.dim();
  const int n = chain.n;
  const int d = chain.d;
#pragma omp parallel if (dim >= kParallelCutoff)
  {
    Eigen::VectorXcd v(chain.chi);
    Eigen::VectorXcd w(chain.chi);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      v = chain.right;
      std::int64_t rest = idx;
      for (int site = 0; site < n; ++site) {
        const int m = static_cast<int>(rest % d);
        rest /= d;
        w.noalias() = chain.sites[site][m] * v;
        v.swap(w);
      }
      state.amplitudes[idx] = chain.left.dot(v);
    }
  }
  return state;
}

double canonicity_residual(const MpsChain& chain, int site) {
  check_chain(chain);
  check_site_index("canonicity_residual", chain.n, site);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(chain.chi, chain.chi);
  for (const auto& mat : chain.sites[site - 1]) {
    sum += mat.adjoint() * mat;
  }
  sum -= Eigen::MatrixXcd::Identity(chain.chi, chain.chi);
  return sum.cwiseAbs().maxCoeff();
}

std::vector<double> canonicity_residuals(const MpsChain& chain) {
  std::vector<double> out;
  for (int site = 1; site <= chain.n; ++site) {
    out.push_back(canonicity_residual(chain, site));
  }
  return out;
}

namespace reference {

DenseState contract(const MpsChain& chain) {
  check_chain(chain);
  DenseState state(chain.n, chain.d);
  const std::int64_t dim = state.dim();
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    Eigen::MatrixXcd product =
        Eigen::MatrixXcd::Identity(chain.chi, chain.chi);
    std::int64_t rest = idx;
    for (int site = 0; site < chain.n; ++site) {
      const int m = static_cast<int>(rest % chain.d);
      rest /= chain.d;
      product = chain.sites[site][m] * product;
    }
    state.amplitudes[idx] = chain.left.dot(product * chain.right);
  }
  return state;
}

}  // namespace reference

}  // namespace dicke::mps
