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

#include "dicke/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "dicke/circuit.hpp"
#include "dicke/core.hpp"
#include "dicke/mps.hpp"
#include "dicke/schmidt.hpp"

namespace dicke::checks {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

CheckResult deviation_check(const std::string& name, double deviation,
                            double tol) {
  return {name, deviation <= tol, "max deviation " + num(deviation)};
}

// Compares singular values against the sorted closed-form coefficient
// multiset, zero-padding the shorter list.
double spectrum_deviation(const std::vector<double>& singular_values,
                          std::vector<double> coefficients) {
  std::sort(coefficients.begin(), coefficients.end(), std::greater<>());
  const std::size_t len =
      std::max(singular_values.size(), coefficients.size());
  double worst = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    const double sv = t < singular_values.size() ? singular_values[t] : 0.0;
    const double cf = t < coefficients.size() ? coefficients[t] : 0.0;
    worst = std::max(worst, std::abs(sv - cf));
  }
  return worst;
}

circuit::HybridState hybrid_basis(int n, int k, int ancilla,
                                  std::int64_t bits) {
  circuit::HybridState state = circuit::make_initial_state(n, k);
  state.amplitudes[0] = 0.0;
  state.amplitudes[ancilla * state.qubit_dim() + bits] = 1.0;
  return state;
}

double hybrid_diff(const circuit::HybridState& a,
                   const circuit::HybridState& b) {
  return max_abs_diff(a.amplitudes, b.amplitudes);
}

void apply_block(circuit::HybridState& state, const std::vector<circuit::Gate>& block) {
  for (const circuit::Gate& gate : block) circuit::apply_gate(state, gate);
}

}  // namespace

CheckResult check_block_truth_tables(int n, int k, double tol) {
  double worst = 0.0;
  int blocks = 0;
  for (int i = 1; i <= n; ++i) {
    for (int l = 0; l <= k - 1; ++l) {
      if (k - l > n - i + 1) continue;  // block outside the state support
      const auto block = circuit::build_block(n, k, i, l);
      const double g0 = mps::qubit_site_entry(n, k, i, l, 0);
      const double g1 = mps::qubit_site_entry(n, k, i, l, 1);
      const std::int64_t bit = std::int64_t{1} << (i - 1);
      ++blocks;
      for (int j = 0; j <= k; ++j) {
        for (int q = 0; q <= 1; ++q) {
          circuit::HybridState state = hybrid_basis(n, k, j, q ? bit : 0);
          apply_block(state, block);
          circuit::HybridState expected = hybrid_basis(n, k, j, q ? bit : 0);
          const std::int64_t qdim = expected.qubit_dim();
          if (q == 0 && j == l) {
            expected.amplitudes.assign(expected.amplitudes.size(), 0.0);
            expected.amplitudes[l * qdim] = g0;
            expected.amplitudes[(l + 1) * qdim + bit] = g1;
          } else if (q == 1 && j == l + 1) {
            expected.amplitudes.assign(expected.amplitudes.size(), 0.0);
            expected.amplitudes[l * qdim] = -g1;
            expected.amplitudes[(l + 1) * qdim + bit] = g0;
          }
          worst = std::max(worst, hybrid_diff(state, expected));
        }
      }
    }
  }
  CheckResult result = deviation_check("block_truth_tables", worst, tol);
  result.detail += " over " + std::to_string(blocks) + " blocks";
  return result;
}

CheckResult check_block_non_interference(int n, int k, double tol) {
  double worst = 0.0;
  int pairs = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j + 1 <= k - 1; ++j) {
      if (k - j > n - i + 1) continue;
      const auto first = circuit::build_block(n, k, i, j);
      circuit::HybridState after_first = hybrid_basis(n, k, j, 0);
      apply_block(after_first, first);
      for (int l = j + 1; l <= k - 1; ++l) {
        circuit::HybridState state = after_first;
        apply_block(state, circuit::build_block(n, k, i, l));
        worst = std::max(worst, hybrid_diff(state, after_first));
        ++pairs;
      }
    }
  }
  CheckResult result = deviation_check("block_non_interference", worst, tol);
  result.detail += " over " + std::to_string(pairs) + " pairs";
  return result;
}

std::vector<CheckResult> verify_qubit(int n, int k, double tol) {
  std::vector<CheckResult> results;
  const DenseState direct = dicke_state(n, k);
  const mps::MpsChain plain = mps::qubit_chain(n, k, false);
  const mps::MpsChain strict = mps::qubit_chain(n, k, true);
  const DenseState contracted = mps::contract(plain);

  results.push_back(deviation_check(
      "contraction_matches_state",
      max_abs_diff(contracted.amplitudes, direct.amplitudes), tol));

  results.push_back(deviation_check(
      "reference_contraction_agrees",
      max_abs_diff(contracted.amplitudes,
                   mps::reference::contract(plain).amplitudes),
      1e-13));

  {
    const auto residuals = mps::canonicity_residuals(strict);
    results.push_back(deviation_check(
        "strict_chain_canonical",
        *std::max_element(residuals.begin(), residuals.end()), tol));
  }

  {
    const auto residuals = mps::canonicity_residuals(plain);
    if (k >= 2) {
      double worst_tail = 0.0;
      for (int i = n - k + 2; i <= n; ++i) {
        worst_tail = std::max(worst_tail, residuals[i - 1]);
      }
      results.push_back({"plain_chain_tail_defect", worst_tail >= 0.5,
                         "largest tail residual " + num(worst_tail)});
    } else {
      results.push_back(deviation_check(
          "plain_chain_canonical",
          *std::max_element(residuals.begin(), residuals.end()), tol));
    }
  }

  results.push_back(deviation_check(
      "strict_substitution_preserves_state",
      max_abs_diff(mps::contract(strict).amplitudes, contracted.amplitudes),
      tol));

  {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (k - j > n - i + 1) continue;
        const double g0 = mps::qubit_site_entry(n, k, i, j, 0);
        const double g1 = mps::qubit_site_entry(n, k, i, j, 1);
        worst = std::max(worst, std::abs(g0 * g0 + g1 * g1 - 1.0));
      }
    }
    results.push_back(deviation_check("entry_sum_rule", worst, tol));
  }

  {
    bool stripe = true;
    for (int i = 1; i <= n && stripe; ++i) {
      for (int m = 0; m <= 1 && stripe; ++m) {
        const auto& mat = plain.sites[i - 1][m];
        for (int r = 0; r < plain.chi && stripe; ++r) {
          for (int c = 0; c < plain.chi; ++c) {
            if (r != c + m && mat(r, c) != cplx{0.0, 0.0}) {
              stripe = false;
              break;
            }
          }
        }
      }
    }
    results.push_back({"stripe_structure", stripe,
                       stripe ? "single sub-diagonal per digit"
                              : "off-stripe entry found"});
  }

  if (n >= 2) {
    double worst_rec = 0.0;
    double worst_spec = 0.0;
    bool ranks_ok = true;
    for (int cut = 1; cut <= n - 1; ++cut) {
      worst_rec = std::max(
          worst_rec, max_abs_diff(schmidt::reconstruct_qubit(n, k, cut).amplitudes,
                                  direct.amplitudes));
      const auto spectrum = schmidt::schmidt_spectrum(direct, cut);
      std::vector<double> coeffs;
      for (const auto& term : qubit_schmidt_coefficients(n, k, cut)) {
        coeffs.push_back(term.value);
      }
      worst_spec = std::max(
          worst_spec, spectrum_deviation(spectrum.values, coeffs));
      if (spectrum.rank != static_cast<int>(coeffs.size())) ranks_ok = false;
    }
    results.push_back(
        deviation_check("schmidt_reconstruction", worst_rec, tol));
    results.push_back(deviation_check("spectrum_matches_coefficients",
                                      worst_spec, kRankTol));
    results.push_back({"cut_ranks_match_term_counts", ranks_ok,
                       ranks_ok ? "all cuts" : "rank mismatch at some cut"});
    const auto middle = schmidt::schmidt_spectrum(direct, n / 2);
    results.push_back({"middle_cut_rank_minimal", middle.rank == k + 1,
                       "rank " + std::to_string(middle.rank) + ", chi " +
                           std::to_string(k + 1)});
  }

  {
    const auto description = circuit::build_circuit(n, k);
    const int expected = 3 * k * (n + 1 - k);
    results.push_back(
        {"circuit_gate_count",
         static_cast<int>(description.gates.size()) == expected,
         std::to_string(description.gates.size()) + " gates, expected " +
             std::to_string(expected)});

    const auto final_state = circuit::simulate(description);
    const double fidelity =
        circuit::preparation_fidelity(final_state, direct, k);
    results.push_back({"circuit_prepares_state", fidelity >= 1.0 - tol,
                       "fidelity 1 - " + num(1.0 - fidelity)});
    results.push_back(deviation_check(
        "circuit_norm_preserved",
        std::abs(l2_norm(final_state.amplitudes) - 1.0), tol));

    double worst_angle = 0.0;
    for (const circuit::Gate& gate : description.gates) {
      if (gate.kind != circuit::GateKind::controlled_rotation) continue;
      const double g0 =
          mps::qubit_site_entry(n, k, gate.block_i, gate.block_l, 0);
      const double g1 =
          mps::qubit_site_entry(n, k, gate.block_i, gate.block_l, 1);
      worst_angle = std::max(worst_angle,
                             std::abs(std::cos(gate.angle / 2.0) - g0));
      worst_angle = std::max(worst_angle,
                             std::abs(std::sin(gate.angle / 2.0) - g1));
    }
    results.push_back(
        deviation_check("rotation_angles_match_entries", worst_angle, 1e-14));

    const auto two_level =
        circuit::simulate(circuit::build_circuit(n, k, circuit::ShiftStyle::two_level));
    results.push_back(deviation_check(
        "shift_styles_agree",
        max_abs_diff(two_level.amplitudes, final_state.amplitudes), tol));
  }

  results.push_back(check_block_truth_tables(n, k, tol));
  results.push_back(check_block_non_interference(n, k, tol));
  return results;
}

std::vector<CheckResult> verify_spin(int n, int k, int two_s, double tol) {
  std::vector<CheckResult> results;
  const DenseState direct = spin_dicke_state(n, k, two_s);
  const mps::MpsChain chain = mps::spin_chain(n, k, two_s);
  const DenseState contracted = mps::contract(chain);

  results.push_back(deviation_check(
      "contraction_matches_state",
      max_abs_diff(contracted.amplitudes, direct.amplitudes), tol));

  results.push_back(deviation_check(
      "closed_form_matches_lowering",
      max_abs_diff(direct.amplitudes,
                   spin_lowering_oracle(n, k, two_s).amplitudes),
      tol));

  results.push_back(deviation_check(
      "reference_contraction_agrees",
      max_abs_diff(contracted.amplitudes,
                   mps::reference::contract(chain).amplitudes),
      1e-13));

  {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (k - j > two_s * (n - i + 1)) continue;
        double sum = 0.0;
        for (int m = 0; m <= two_s; ++m) {
          const double g = mps::spin_site_entry(n, k, two_s, i, j, m);
          sum += g * g;
        }
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
    results.push_back(deviation_check("entry_sum_rule", worst, tol));
  }

  results.push_back(
      {"bond_dimension_structural", chain.chi == k + 1,
       "chi " + std::to_string(chain.chi) + ", expected " +
           std::to_string(k + 1)});

  {
    const mps::MpsChain uniform = mps::ti_chain(n, k, two_s);
    DenseState prop = mps::contract(uniform);
    const double norm = l2_norm(prop.amplitudes);
    double worst = 1.0;
    if (norm > 0.0) {
      for (auto& a : prop.amplitudes) a /= norm;
      worst = max_abs_diff(prop.amplitudes, direct.amplitudes);
    }
    results.push_back(
        deviation_check("uniform_chain_proportional", worst, tol));

    const auto residuals = mps::canonicity_residuals(uniform);
    const double largest =
        *std::max_element(residuals.begin(), residuals.end());
    results.push_back({"uniform_chain_not_canonical", largest > 0.1,
                       "largest residual " + num(largest)});
  }

  if (n >= 2) {
    double worst_rec = 0.0;
    double worst_spec = 0.0;
    bool ranks_ok = true;
    for (int cut = 1; cut <= n - 1; ++cut) {
      worst_rec = std::max(
          worst_rec,
          max_abs_diff(schmidt::reconstruct_spin(n, k, two_s, cut).amplitudes,
                       direct.amplitudes));
      const auto spectrum = schmidt::schmidt_spectrum(direct, cut);
      std::vector<double> coeffs;
      for (const auto& term : spin_schmidt_coefficients(n, k, two_s, cut)) {
        coeffs.push_back(term.value);
      }
      worst_spec = std::max(
          worst_spec, spectrum_deviation(spectrum.values, coeffs));
      if (spectrum.rank != static_cast<int>(coeffs.size())) ranks_ok = false;
    }
    results.push_back(
        deviation_check("schmidt_reconstruction", worst_rec, tol));
    results.push_back(deviation_check("spectrum_matches_coefficients",
                                      worst_spec, kRankTol));
    results.push_back({"cut_ranks_match_term_counts", ranks_ok,
                       ranks_ok ? "all cuts" : "rank mismatch at some cut"});

    // chi terms survive at the middle cut iff k <= 2s * floor(n/2); for odd
    // n and nearly full weight the middle rank is smaller by the deficit.
    const int cut = n / 2;
    const int expected = std::min(k, two_s * cut) -
                         std::max(0, k - two_s * (n - cut)) + 1;
    const auto middle = schmidt::schmidt_spectrum(direct, cut);
    results.push_back(
        {"middle_cut_rank", middle.rank == expected,
         "rank " + std::to_string(middle.rank) + ", expected " +
             std::to_string(expected) + ", chi " + std::to_string(k + 1)});
  }

  return results;
}

std::vector<CheckResult> verify_qudit(int n, const OccupationVector& kvec,
                                      double tol) {
  std::vector<CheckResult> results;
  const DenseState direct = qudit_dicke_state(n, kvec);
  const mps::SectorLabeling labeling = mps::enumerate_sectors(n, kvec);
  const mps::MpsChain chain = mps::qudit_chain(n, kvec);
  const DenseState contracted = mps::contract(chain);
  const int d = static_cast<int>(kvec.size());

  results.push_back(deviation_check(
      "contraction_matches_state",
      max_abs_diff(contracted.amplitudes, direct.amplitudes), tol));

  results.push_back(deviation_check(
      "reference_contraction_agrees",
      max_abs_diff(contracted.amplitudes,
                   mps::reference::contract(chain).amplitudes),
      1e-13));

  {
    int largest = 0;
    for (int l = 0; l <= n; ++l) largest = std::max(largest, labeling.size(l));
    results.push_back({"middle_sector_is_largest",
                       labeling.chi == labeling.size(n / 2) &&
                           labeling.chi == largest,
                       "chi " + std::to_string(labeling.chi) +
                           ", largest sector " + std::to_string(largest)});
  }

  {
    double worst = 0.0;
    for (int l = 1; l <= n; ++l) {
      for (const OccupationVector& a : labeling.sectors[l - 1]) {
        double sum = 0.0;
        for (int m = 0; m < d; ++m) {
          const double g = mps::qudit_site_entry(n, kvec, l, a, m);
          sum += g * g;
        }
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
    results.push_back(deviation_check("entry_sum_rule", worst, tol));
  }

  {
    bool single = true;
    for (const auto& site : chain.sites) {
      for (const auto& mat : site) {
        for (int c = 0; c < chain.chi && single; ++c) {
          int nonzero = 0;
          for (int r = 0; r < chain.chi; ++r) {
            if (mat(r, c) != cplx{0.0, 0.0}) ++nonzero;
          }
          if (nonzero > 1) single = false;
        }
      }
    }
    results.push_back({"single_entry_per_column", single,
                       single ? "all site matrices" : "violating column found"});
  }

  if (n >= 2) {
    double worst_rec = 0.0;
    double worst_spec = 0.0;
    bool ranks_ok = true;
    for (int cut = 1; cut <= n - 1; ++cut) {
      worst_rec = std::max(
          worst_rec,
          max_abs_diff(schmidt::reconstruct_qudit(n, kvec, cut).amplitudes,
                       direct.amplitudes));
      const auto spectrum = schmidt::schmidt_spectrum(direct, cut);
      std::vector<double> coeffs;
      for (const auto& term : qudit_schmidt_coefficients(n, kvec, cut)) {
        coeffs.push_back(term.value);
      }
      worst_spec = std::max(
          worst_spec, spectrum_deviation(spectrum.values, coeffs));
      // Every sector coefficient is strictly positive, so the rank at each
      // cut must equal the sector count there.
      if (spectrum.rank != labeling.size(cut)) ranks_ok = false;
    }
    results.push_back(
        deviation_check("schmidt_reconstruction", worst_rec, tol));
    results.push_back(deviation_check("spectrum_matches_coefficients",
                                      worst_spec, kRankTol));
    results.push_back({"cut_ranks_match_sector_counts", ranks_ok,
                       ranks_ok ? "all cuts" : "rank mismatch at some cut"});
    const auto middle = schmidt::schmidt_spectrum(direct, n / 2);
    results.push_back({"middle_cut_rank_minimal", middle.rank == chain.chi,
                       "rank " + std::to_string(middle.rank) + ", chi " +
                           std::to_string(chain.chi)});
  }

  {
    // Sites whose incoming bond has fewer sectors than chi carry zero
    // columns, so the canonicity defect there is exactly 1.
    const auto residuals = mps::canonicity_residuals(chain);
    double worst = 0.0;
    for (int l = 1; l <= n; ++l) {
      const double expected = labeling.size(l - 1) < chain.chi ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(residuals[l - 1] - expected));
    }
    results.push_back(
        deviation_check("canonicity_defect_profile", worst, tol));
  }

  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace dicke::checks
