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

#include <string>

#include "dicke/types.hpp"

namespace dicke::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Cross-checks one instance end to end: contraction against the direct
// construction, canonicity, Schmidt data against the SVD, and (for qubits)
// the preparation circuit. Every check compares two independent routes.
std::vector<CheckResult> verify_qubit(int n, int k, double tol = kAmplitudeTol);
std::vector<CheckResult> verify_spin(int n, int k, int two_s,
                                     double tol = kAmplitudeTol);
std::vector<CheckResult> verify_qudit(int n, const OccupationVector& kvec,
                                      double tol = kAmplitudeTol);

// Exhaustive action of every preparation block on every ancilla/qubit basis
// pair, compared against the closed-form truth table.
CheckResult check_block_truth_tables(int n, int k, double tol = kAmplitudeTol);

// Later blocks must leave the output of earlier blocks untouched.
CheckResult check_block_non_interference(int n, int k,
                                         double tol = kAmplitudeTol);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dicke::checks
